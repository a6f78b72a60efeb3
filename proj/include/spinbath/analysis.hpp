#pragma once

#include <optional>
#include <span>

#include "spinbath/model.hpp"
#include "spinbath/types.hpp"

namespace spinbath {

/// Quantitative findings for one real-valued metric curve.
struct DecoherenceReport {
    std::optional<double> decoherence_time;
    double threshold = 0.0;
    double fluctuation_rms = 0.0;
    double fluctuation_max = 0.0;
    std::optional<double> recurrence_time;
};

struct FluctuationStats {
    double rms = 0.0;
    double max_abs = 0.0;
};

struct EnvelopeBounds {
    double min_product = 0.0;
    double max_product = 1.0;
    // The lower bound holds factor-wise for every t; the product form is
    // attained simultaneously only when the factor minima can align.
    bool simultaneous = false;
};

/// First grid time where the value drops strictly below `threshold` and the
/// next `persistence` samples stay below; nullopt if that never happens.
std::optional<double> decoherence_time(const TimeGrid& grid, std::span<const double> values,
                                       double threshold, std::size_t persistence = 5);

/// RMS and max |value| over grid points with t >= t_from.
FluctuationStats fluctuation_stats(const TimeGrid& grid, std::span<const double> values,
                                   double t_from);

/// Factor-wise bounds of the |r1|^2 product: max 1, min prod_i (2|alpha_i|^2 - 1)^2.
EnvelopeBounds envelope_bounds(const ModelConfig& config);

/// Earliest grid time after the first drop below `threshold` where the value
/// climbs back to >= threshold; nullopt if it never drops or never returns.
std::optional<double> recurrence_search(const TimeGrid& grid, std::span<const double> values,
                                        double threshold);

/// Full report: decoherence time, tail fluctuations (from the decoherence
/// time when found, else from the second half of the grid), and recurrence
/// back to `recurrence_fraction` of the initial value.
DecoherenceReport analyze_curve(const TimeGrid& grid, std::span<const double> values,
                                double threshold, std::size_t persistence = 5,
                                double recurrence_fraction = 0.99);

}  // namespace spinbath
