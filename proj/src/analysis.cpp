#include "spinbath/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "spinbath/pairwise.hpp"

namespace spinbath {

std::optional<double> decoherence_time(const TimeGrid& grid, std::span<const double> values,
                                       double threshold, std::size_t persistence) {
    if (values.size() != grid.steps)
        throw std::invalid_argument("decoherence_time: curve length mismatch");
    if (!(threshold > 0.0) || !(threshold < values.front()))
        throw std::invalid_argument("decoherence_time: threshold must lie in (0, value at t_start)");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] < threshold))
            continue;
        if (i + persistence >= values.size())
            return std::nullopt;  // cannot confirm the crossing is sustained
        bool sustained = true;
        for (std::size_t k = 1; k <= persistence; ++k) {
            if (!(values[i + k] < threshold)) {
                sustained = false;
                break;
            }
        }
        if (sustained)
            return grid.time_at(i);
    }
    return std::nullopt;
}

FluctuationStats fluctuation_stats(const TimeGrid& grid, std::span<const double> values,
                                   double t_from) {
    if (values.size() != grid.steps)
        throw std::invalid_argument("fluctuation_stats: curve length mismatch");
    std::size_t first = 0;
    while (first < values.size() && grid.time_at(first) < t_from)
        ++first;
    if (first >= values.size())
        throw std::invalid_argument("fluctuation_stats: empty tail window");
    const std::size_t count = values.size() - first;
    const double sumsq = pairwise_sum<double>(first, values.size(), [&](std::size_t k) {
        return values[k] * values[k];
    });
    FluctuationStats stats;
    stats.rms = std::sqrt(sumsq / static_cast<double>(count));
    for (std::size_t k = first; k < values.size(); ++k)
        stats.max_abs = std::max(stats.max_abs, std::abs(values[k]));
    return stats;
}

EnvelopeBounds envelope_bounds(const ModelConfig& config) {
    EnvelopeBounds bounds{1.0, 1.0, true};
    for (const auto& q : config.env) {
        const double d = 2.0 * std::norm(q.alpha) - 1.0;
        bounds.min_product *= d * d;
    }
    if (config.n() > 1) {
        // Minima align only when all couplings coincide.
        const double g0 = config.env.front().g;
        for (const auto& q : config.env)
            if (q.g != g0)
                bounds.simultaneous = false;
    }
    return bounds;
}

std::optional<double> recurrence_search(const TimeGrid& grid, std::span<const double> values,
                                        double threshold) {
    if (values.size() != grid.steps)
        throw std::invalid_argument("recurrence_search: curve length mismatch");
    std::size_t i = 0;
    while (i < values.size() && !(values[i] < threshold))
        ++i;
    for (; i < values.size(); ++i)
        if (values[i] >= threshold)
            return grid.time_at(i);
    return std::nullopt;
}

DecoherenceReport analyze_curve(const TimeGrid& grid, std::span<const double> values,
                                double threshold, std::size_t persistence,
                                double recurrence_fraction) {
    DecoherenceReport report;
    report.threshold = threshold;
    report.decoherence_time = decoherence_time(grid, values, threshold, persistence);
    const double t_from = report.decoherence_time
                              ? *report.decoherence_time
                              : grid.t_start + 0.5 * (grid.t_end - grid.t_start);
    const auto stats = fluctuation_stats(grid, values, t_from);
    report.fluctuation_rms = stats.rms;
    report.fluctuation_max = stats.max_abs;
    if (report.decoherence_time)
        report.recurrence_time =
            recurrence_search(grid, values, recurrence_fraction * values.front());
    return report;
}

}  // namespace spinbath
