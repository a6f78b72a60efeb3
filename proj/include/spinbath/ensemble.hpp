#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spinbath/model.hpp"
#include "spinbath/types.hpp"

namespace spinbath {

enum class PhaseMode { real_amplitudes, random_phases };

/// Sampling protocol for random model instances. The paper draws |alpha_i|^2
/// uniformly and sets |beta_i|^2 = 1 - |alpha_i|^2; couplings are drawn
/// uniformly from (g_min, g_max].
struct SamplingPolicy {
    std::uint64_t seed = 0;
    double g_min = 0.0;
    double g_max = 1.0;
    PhaseMode phase_mode = PhaseMode::real_amplitudes;

    void check() const;
};

/// Pointwise mean and unbiased variance of a metric curve across seeded
/// realizations.
struct EnsembleStats {
    TimeGrid grid;
    std::vector<double> mean;
    std::vector<double> variance;
    std::size_t sample_count = 0;
};

/// Metric evaluated per ensemble member: real curve on the given grid.
using CurveMetric = std::function<std::vector<double>(const ModelConfig&, const TimeGrid&)>;

/// Sub-seed for ensemble member k (k-th splitmix64 output of policy.seed).
std::uint64_t member_seed(std::uint64_t seed, std::uint64_t k);

/// Draw one model instance. Per particle, in index order: |alpha|^2, then g,
/// then (random_phases only) the two phases — so particle streams are
/// prefix-stable when N grows.
ModelConfig sample_model(const SamplingPolicy& policy, std::size_t n, const SystemQubit& system);

/// Mean/variance of `metric` over `samples` independently seeded realizations.
/// Members reduce with a fixed pairwise tree, so results do not depend on
/// evaluation order.
EnsembleStats ensemble_average(const SamplingPolicy& policy, std::size_t n, std::size_t samples,
                               const SystemQubit& system, const CurveMetric& metric,
                               const TimeGrid& grid);

}  // namespace spinbath
