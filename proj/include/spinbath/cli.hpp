#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "spinbath/ensemble.hpp"
#include "spinbath/model.hpp"
#include "spinbath/types.hpp"

namespace spinbath::cli {

inline constexpr double kVerifyTolerance = 1e-10;
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailure = 2;
inline constexpr int kExitIo = 3;

enum class CaseKind { case1, case2, case3, general };
enum class ProductMode { direct, log_domain };

/// Fully resolved run description. Flags override config-file values; every
/// field has a default.
struct RunConfig {
    CaseKind kind = CaseKind::case1;
    std::size_t n = 10;
    std::optional<std::size_t> p;  // case3; defaults to n
    std::size_t j = 1;             // case2
    SystemQubit system{cplx(std::numbers::sqrt2 / 2.0, 0.0),
                       cplx(std::numbers::sqrt2 / 2.0, 0.0)};
    SamplingPolicy policy{42, 0.0, 1.0, PhaseMode::real_amplitudes};
    TimeGrid grid{0.0, 20.0, 1000};
    std::optional<double> threshold;  // absolute, on the magnitude metric
    std::size_t persistence = 5;
    std::size_t samples = 1;
    bool strict_paper = false;
    ProductMode product_mode = ProductMode::direct;
    std::string metric = "re";  // recurrence subcommand: "re" | "abs2"
    std::string out_dir;        // --out, else $SPINBATH_OUT_DIR, else "."

    ParticleObservable case2_block = spin_x_block();
    std::optional<std::vector<ParticleObservable>> case3_blocks;  // default: p spin-x blocks
    std::optional<ObservableSpec> observable;                     // general case; from file

    std::size_t effective_p() const { return p.value_or(n); }
    void validate() const;  // throws std::invalid_argument naming the field
};

struct SweepSpec {
    std::string param;                // "n" | "p" | "samples"
    std::vector<std::size_t> values;  // non-empty
};

/// Load a RunConfig from the JSON config file (schema_version 1).
RunConfig parse_config_file(const std::string& path);

void run_simulate(const RunConfig& rc);

/// Closed form vs oracle on the configured grid; returns the max absolute
/// deviation (also written to verify.txt).
double run_verify(const RunConfig& rc);

void run_sweep(const RunConfig& rc, const SweepSpec& sweep);
void run_envelope(const RunConfig& rc);
void run_recurrence(const RunConfig& rc);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace spinbath::cli
