#include "spinbath/io.hpp"

#include <cstdio>
#include <fstream>

namespace spinbath {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out)
        throw IoError("write failed for " + path);
}

}  // namespace

void write_curve_csv(const std::string& path, std::span<const double> ts,
                     std::span<const double> re, std::span<const double> im,
                     std::span<const double> abs2) {
    if (re.size() != ts.size() || im.size() != ts.size() || abs2.size() != ts.size())
        throw IoError("write_curve_csv: column length mismatch");
    auto out = open_for_write(path);
    out << "t,re,im,abs2\n";
    for (std::size_t i = 0; i < ts.size(); ++i)
        out << format_double(ts[i]) << ',' << format_double(re[i]) << ','
            << format_double(im[i]) << ',' << format_double(abs2[i]) << '\n';
    finish(out, path);
}

void write_log_curve_csv(const std::string& path, std::span<const double> ts,
                         std::span<const double> log_abs2, std::span<const double> phase) {
    if (log_abs2.size() != ts.size() || phase.size() != ts.size())
        throw IoError("write_log_curve_csv: column length mismatch");
    auto out = open_for_write(path);
    out << "t,log_abs2,phase\n";
    for (std::size_t i = 0; i < ts.size(); ++i)
        out << format_double(ts[i]) << ',' << format_double(log_abs2[i]) << ','
            << format_double(phase[i]) << '\n';
    finish(out, path);
}

void write_summary(const std::string& path,
                   const std::vector<std::pair<std::string, std::string>>& fields) {
    auto out = open_for_write(path);
    for (const auto& [key, value] : fields)
        out << key << ": " << value << '\n';
    finish(out, path);
}

}  // namespace spinbath
