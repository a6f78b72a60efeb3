#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "spinbath/types.hpp"

namespace spinbath {

/// Central spin-1/2 particle P in the state a|up> + b|down>.
struct SystemQubit {
    cplx a{1.0, 0.0};
    cplx b{0.0, 0.0};

    static SystemQubit checked(cplx a, cplx b);
};

/// One environment particle P_i: amplitudes (alpha, beta) and coupling g.
struct EnvQubit {
    cplx alpha{1.0, 0.0};
    cplx beta{0.0, 0.0};
    double g = 0.0;

    static EnvQubit checked(cplx alpha, cplx beta, double g);
};

/// Whole closed-system instance: one central particle plus N >= 1 bath particles.
struct ModelConfig {
    SystemQubit system;
    std::vector<EnvQubit> env;

    std::size_t n() const { return env.size(); }

    static ModelConfig checked(SystemQubit system, std::vector<EnvQubit> env);
};

/// Hermitian 2x2 block acting on the central particle. Diagonal entries are
/// real; only the upper off-diagonal entry is stored, the lower one is its
/// conjugate by construction.
struct SystemObservable {
    double s_uu = 0.0;
    double s_dd = 0.0;
    cplx s_ud{0.0, 0.0};
};

/// Hermitian 2x2 block acting on one bath particle; same storage convention.
struct ParticleObservable {
    double e_uu = 0.0;
    double e_dd = 0.0;
    cplx e_ud{0.0, 0.0};
};

/// Tensor-product observable: one system block and one block per particle.
struct ObservableSpec {
    SystemObservable system_block;
    std::vector<ParticleObservable> particle_blocks;
};

/// Row-major 2x2 matrix {m00, m01, m10, m11} in the (up, down) basis.
using Block2x2 = std::array<cplx, 4>;

inline Block2x2 system_matrix(const SystemObservable& b) {
    return {cplx(b.s_uu, 0.0), b.s_ud, std::conj(b.s_ud), cplx(b.s_dd, 0.0)};
}

inline Block2x2 particle_matrix(const ParticleObservable& b) {
    return {cplx(b.e_uu, 0.0), b.e_ud, std::conj(b.e_ud), cplx(b.e_dd, 0.0)};
}

ParticleObservable identity_particle_block();

/// Spin projection onto the x-axis: e_ud = 1/2, zero diagonal.
ParticleObservable spin_x_block();

inline SystemObservable identity_system_block() { return {1.0, 1.0, cplx(0.0, 0.0)}; }

/// Case 1: observe the central particle only; all bath blocks are identities.
ObservableSpec case1_spec(const ModelConfig& config, const SystemObservable& sys_block);

/// Case 2: observe bath particle j (1-based); everything else is identity.
ObservableSpec case2_spec(const ModelConfig& config, std::size_t j, const ParticleObservable& block);

/// Case 3: observe the first p bath particles with the given blocks;
/// identity on the system and on particles p+1..N.
ObservableSpec case3_spec(const ModelConfig& config, std::span<const ParticleObservable> blocks);

}  // namespace spinbath
