#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinbath {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal form that round-trips a double exactly (%.17g).
std::string format_double(double x);

/// Curve file: header `t,re,im,abs2`, one row per grid point, 17 significant
/// digits throughout.
void write_curve_csv(const std::string& path, std::span<const double> ts,
                     std::span<const double> re, std::span<const double> im,
                     std::span<const double> abs2);

/// Log-domain curve variant: header `t,log_abs2,phase`.
void write_log_curve_csv(const std::string& path, std::span<const double> ts,
                         std::span<const double> log_abs2, std::span<const double> phase);

/// Summary document: one `key: value` line per field, in the given order.
void write_summary(const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>& fields);

}  // namespace spinbath
