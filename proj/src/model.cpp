#include "spinbath/model.hpp"

#include <cmath>
#include <string>

namespace spinbath {

namespace {

void check_normalized(cplx x, cplx y, const char* what) {
    const double n = std::norm(x) + std::norm(y);
    if (std::abs(n - 1.0) > kNormTolerance)
        throw std::invalid_argument(std::string(what) +
                                    ": amplitudes not normalized, |.|^2 sum = " + std::to_string(n));
}

}  // namespace

SystemQubit SystemQubit::checked(cplx a, cplx b) {
    check_normalized(a, b, "SystemQubit");
    return SystemQubit{a, b};
}

EnvQubit EnvQubit::checked(cplx alpha, cplx beta, double g) {
    check_normalized(alpha, beta, "EnvQubit");
    if (!std::isfinite(g))
        throw std::invalid_argument("EnvQubit: coupling must be finite");
    return EnvQubit{alpha, beta, g};
}

ModelConfig ModelConfig::checked(SystemQubit system, std::vector<EnvQubit> env) {
    if (env.empty())
        throw std::invalid_argument("ModelConfig: environment needs at least one particle");
    check_normalized(system.a, system.b, "ModelConfig.system");
    for (const auto& q : env)
        check_normalized(q.alpha, q.beta, "ModelConfig.env");
    return ModelConfig{system, std::move(env)};
}

ParticleObservable identity_particle_block() { return {1.0, 1.0, cplx(0.0, 0.0)}; }

ParticleObservable spin_x_block() { return {0.0, 0.0, cplx(0.5, 0.0)}; }

ObservableSpec case1_spec(const ModelConfig& config, const SystemObservable& sys_block) {
    return {sys_block, std::vector<ParticleObservable>(config.n(), identity_particle_block())};
}

ObservableSpec case2_spec(const ModelConfig& config, std::size_t j, const ParticleObservable& block) {
    if (j < 1 || j > config.n())
        throw std::out_of_range("case2_spec: particle index j = " + std::to_string(j) +
                                " outside 1.." + std::to_string(config.n()));
    ObservableSpec spec{identity_system_block(),
                        std::vector<ParticleObservable>(config.n(), identity_particle_block())};
    spec.particle_blocks[j - 1] = block;
    return spec;
}

ObservableSpec case3_spec(const ModelConfig& config, std::span<const ParticleObservable> blocks) {
    const std::size_t p = blocks.size();
    if (p < 1 || p > config.n())
        throw std::out_of_range("case3_spec: p = " + std::to_string(p) + " outside 1.." +
                                std::to_string(config.n()));
    ObservableSpec spec{identity_system_block(),
                        std::vector<ParticleObservable>(config.n(), identity_particle_block())};
    for (std::size_t i = 0; i < p; ++i)
        spec.particle_blocks[i] = blocks[i];
    return spec;
}

}  // namespace spinbath
