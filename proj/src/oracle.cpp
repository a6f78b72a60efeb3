#include "spinbath/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinbath/kernels/state_kernels.hpp"
#include "spinbath/pairwise.hpp"

namespace spinbath::oracle {

namespace {

void check_dimensions(const StateVector& state, const ModelConfig& config) {
    const std::size_t dim = std::size_t{1} << (config.n() + 1);
    if (state.n_qubits != config.n() + 1 || state.amps.size() != dim)
        throw std::invalid_argument("oracle: state dimension does not match config");
}

void check_capacity(const ModelConfig& config) {
    if (config.n() > kMaxOracleQubits)
        throw std::length_error("oracle: N = " + std::to_string(config.n()) +
                                " exceeds capacity; use N <= " +
                                std::to_string(kMaxOracleQubits));
}

}  // namespace

double StateVector::norm() const {
    const double n2 = pairwise_sum<double>(0, amps.size(),
                                           [this](std::size_t k) { return std::norm(amps[k]); });
    return std::sqrt(n2);
}

StateVector initial_state(const ModelConfig& config) {
    check_capacity(config);
    StateVector state{config.n() + 1, {}};
    state.amps.reserve(std::size_t{1} << (config.n() + 1));
    state.amps = {config.system.a, config.system.b};
    for (const auto& q : config.env) {
        const std::size_t half = state.amps.size();
        state.amps.resize(2 * half);
        for (std::size_t k = 0; k < half; ++k) {
            state.amps[k + half] = state.amps[k] * q.beta;
            state.amps[k] = state.amps[k] * q.alpha;
        }
    }
    return state;
}

StateVector evolve(const StateVector& state, const ModelConfig& config, double t) {
    check_dimensions(state, config);
    // Bath-pattern energies sum_i sigma_i g_i, built by doubling.
    std::vector<double> energy{0.0};
    for (const auto& q : config.env) {
        const std::size_t half = energy.size();
        energy.resize(2 * half);
        for (std::size_t k = 0; k < half; ++k) {
            energy[k + half] = energy[k] - q.g;
            energy[k] = energy[k] + q.g;
        }
    }
    const double half_t = 0.5 * t;
    std::vector<double> phases(state.amps.size());
    for (std::size_t k = 0; k < phases.size(); ++k) {
        const double branch = energy[k >> 1] * half_t;
        phases[k] = (k & 1) ? -branch : branch;
    }
    StateVector out = state;
    kernels::rotate_phases(out.amps, phases);
    return out;
}

StateVector apply_observable(const StateVector& state, const ObservableSpec& spec) {
    if (spec.particle_blocks.size() + 1 != state.n_qubits)
        throw std::invalid_argument("oracle: observable spec does not match state dimension");
    StateVector out = state;
    kernels::apply_block(out.amps, 0, system_matrix(spec.system_block));
    for (std::size_t i = 0; i < spec.particle_blocks.size(); ++i)
        kernels::apply_block(out.amps, i + 1, particle_matrix(spec.particle_blocks[i]));
    return out;
}

double expectation(const ModelConfig& config, const ObservableSpec& spec, double t) {
    const StateVector psi = evolve(initial_state(config), config, t);
    const StateVector opsi = apply_observable(psi, spec);
    const cplx value = pairwise_sum<cplx>(0, psi.amps.size(), [&](std::size_t k) {
        return std::conj(psi.amps[k]) * opsi.amps[k];
    });
    if (std::abs(value.imag()) > 1e-10)
        throw std::runtime_error("oracle expectation: imaginary residue " +
                                 std::to_string(value.imag()));
    return value.real();
}

}  // namespace spinbath::oracle
