#include "spinbath/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spinbath/pairwise.hpp"
#include "spinbath/rng.hpp"

namespace spinbath {

void SamplingPolicy::check() const {
    if (!(g_min < g_max))
        throw std::invalid_argument("SamplingPolicy: g_min must be < g_max");
    if (g_min < 0.0)
        throw std::invalid_argument("SamplingPolicy: g_min must be >= 0");
}

std::uint64_t member_seed(std::uint64_t seed, std::uint64_t k) {
    return splitmix64_at(seed, k);
}

ModelConfig sample_model(const SamplingPolicy& policy, std::size_t n, const SystemQubit& system) {
    policy.check();
    if (n == 0)
        throw std::invalid_argument("sample_model: N must be >= 1");
    Rng rng(policy.seed);
    std::vector<EnvQubit> env;
    env.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double mag2 = rng.next_unit();
        const double g = policy.g_max - rng.next_unit() * (policy.g_max - policy.g_min);
        const double ar = std::sqrt(mag2);
        const double br = std::sqrt(1.0 - mag2);
        if (policy.phase_mode == PhaseMode::random_phases) {
            const double pa = 2.0 * std::numbers::pi * rng.next_unit();
            const double pb = 2.0 * std::numbers::pi * rng.next_unit();
            env.push_back({ar * cplx(std::cos(pa), std::sin(pa)),
                           br * cplx(std::cos(pb), std::sin(pb)), g});
        } else {
            env.push_back({cplx(ar, 0.0), cplx(br, 0.0), g});
        }
    }
    return ModelConfig{system, std::move(env)};
}

EnsembleStats ensemble_average(const SamplingPolicy& policy, std::size_t n, std::size_t samples,
                               const SystemQubit& system, const CurveMetric& metric,
                               const TimeGrid& grid) {
    policy.check();
    if (samples < 2)
        throw std::invalid_argument("ensemble_average: samples must be >= 2");

    std::vector<std::vector<double>> rows(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        SamplingPolicy member = policy;
        member.seed = member_seed(policy.seed, k);
        rows[k] = metric(sample_model(member, n, system), grid);
        if (rows[k].size() != grid.steps)
            throw std::invalid_argument("ensemble_average: metric curve length mismatch");
    }

    EnsembleStats stats{grid, std::vector<double>(grid.steps), std::vector<double>(grid.steps),
                        samples};
    const double inv_n = 1.0 / static_cast<double>(samples);
    const double inv_nm1 = 1.0 / static_cast<double>(samples - 1);
    for (std::size_t j = 0; j < grid.steps; ++j) {
        const double m =
            pairwise_sum<double>(0, samples, [&](std::size_t k) { return rows[k][j]; }) * inv_n;
        const double v = pairwise_sum<double>(0, samples, [&](std::size_t k) {
                             const double d = rows[k][j] - m;
                             return d * d;
                         }) *
                         inv_nm1;
        stats.mean[j] = m;
        stats.variance[j] = v;
    }
    return stats;
}

}  // namespace spinbath
