#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spinbath {

using cplx = std::complex<double>;

/// Amplitude-normalization tolerance for qubit constructors.
inline constexpr double kNormTolerance = 1e-12;

/// Uniform sampling grid: `steps` points from t_start to t_end inclusive.
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 1.0;
    std::size_t steps = 2;

    static TimeGrid checked(double t_start, double t_end, std::size_t steps) {
        if (!(t_end > t_start))
            throw std::invalid_argument("TimeGrid: t_end must exceed t_start");
        if (steps < 2)
            throw std::invalid_argument("TimeGrid: steps must be >= 2");
        return TimeGrid{t_start, t_end, steps};
    }

    double dt() const { return (t_end - t_start) / static_cast<double>(steps - 1); }

    double time_at(std::size_t i) const { return t_start + static_cast<double>(i) * dt(); }

    std::vector<double> times() const {
        std::vector<double> ts(steps);
        const double d = dt();
        for (std::size_t i = 0; i < steps; ++i)
            ts[i] = t_start + static_cast<double>(i) * d;
        return ts;
    }
};

/// Sampled (possibly complex) expectation-value series on a uniform grid.
struct Curve {
    TimeGrid grid;
    std::vector<cplx> values;
};

}  // namespace spinbath
