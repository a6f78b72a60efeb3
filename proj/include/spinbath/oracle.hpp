#pragma once

#include <cstddef>
#include <vector>

#include "spinbath/model.hpp"
#include "spinbath/types.hpp"

namespace spinbath::oracle {

// Brute-force verifier: full 2^(N+1)-dimensional state vector, phases derived
// from the Hamiltonian convention itself. Shares only the domain types with
// the closed-form engine.

/// Largest environment size the oracle accepts (2^15 amplitudes total).
inline constexpr std::size_t kMaxOracleQubits = 14;

/// Dense amplitude vector over N+1 qubits. Qubit 0 is the central particle,
/// qubits 1..N the bath; basis-index bit k = 0 selects up, 1 selects down.
struct StateVector {
    std::size_t n_qubits = 1;
    std::vector<cplx> amps;

    double norm() const;
};

StateVector initial_state(const ModelConfig& config);

/// One-shot diagonal evolution to time t: each basis amplitude picks up
/// e^{+i s (sum_i sigma_i g_i) t/2}, s = +1 on the system-up branch,
/// sigma_i = +1 for bath spin-up. Pure phases; norm is preserved.
StateVector evolve(const StateVector& state, const ModelConfig& config, double t);

/// Matrix-free tensor application: one 2x2 block per qubit, N+1 passes.
StateVector apply_observable(const StateVector& state, const ObservableSpec& spec);

/// <psi(t)| O |psi(t)> via initial_state -> evolve -> apply_observable.
double expectation(const ModelConfig& config, const ObservableSpec& spec, double t);

}  // namespace spinbath::oracle
