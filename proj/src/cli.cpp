#include "spinbath/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinbath/analysis.hpp"
#include "spinbath/closed_form.hpp"
#include "spinbath/io.hpp"
#include "spinbath/kernels/dispatch.hpp"
#include "spinbath/oracle.hpp"
#include "spinbath/rng.hpp"

namespace spinbath::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kBlockStreamIndex = 0x100000000ULL;  // past any member index

std::string case_name(CaseKind k) {
    switch (k) {
        case CaseKind::case1: return "case1";
        case CaseKind::case2: return "case2";
        case CaseKind::case3: return "case3";
        default: return "general";
    }
}

std::string opt_time(const std::optional<double>& t) {
    return t ? format_double(*t) : "none";
}

std::string cplx_str(cplx z) {
    return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
}

std::filesystem::path ensure_out_dir(const RunConfig& rc) {
    std::filesystem::path dir = rc.out_dir.empty() ? "." : rc.out_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    return dir;
}

std::vector<ParticleObservable> case3_blocks_for(const RunConfig& rc) {
    if (rc.case3_blocks)
        return *rc.case3_blocks;
    return std::vector<ParticleObservable>(rc.effective_p(), spin_x_block());
}

// The real-valued series each case plots (the per-figure quantity).
std::vector<double> plot_curve(const RunConfig& rc, const ModelConfig& config,
                               const TimeGrid& grid) {
    switch (rc.kind) {
        case CaseKind::case1:
            return r1_abs2_curve(config, grid);
        case CaseKind::case2: {
            const Curve z = case2_curve(config, rc.j, rc.case2_block, grid);
            std::vector<double> re(z.values.size());
            for (std::size_t i = 0; i < z.values.size(); ++i)
                re[i] = z.values[i].real();
            return re;
        }
        case CaseKind::case3: {
            const auto blocks = case3_blocks_for(rc);
            return case3_curve(config, blocks, grid);
        }
        default:
            return expectation_curve(config, *rc.observable, grid);
    }
}

struct Emitted {
    std::vector<double> ts;
    std::vector<double> re;
    std::vector<double> im;
    std::vector<double> abs2;  // magnitude metric (decoherence/recurrence input)
    std::vector<double> plot;  // plotted series (fluctuation input)
};

Emitted build_emitted(const RunConfig& rc) {
    Emitted e;
    e.ts = rc.grid.times();
    const std::size_t steps = e.ts.size();

    if (rc.samples > 1) {
        const auto metric = [&rc](const ModelConfig& config, const TimeGrid& grid) {
            return plot_curve(rc, config, grid);
        };
        const EnsembleStats stats =
            ensemble_average(rc.policy, rc.n, rc.samples, rc.system, metric, rc.grid);
        e.re = stats.mean;
        e.im.assign(steps, 0.0);
        e.abs2.resize(steps);
        for (std::size_t i = 0; i < steps; ++i)
            e.abs2[i] = stats.mean[i] * stats.mean[i];
        e.plot = stats.mean;
        return e;
    }

    const ModelConfig config = sample_model(rc.policy, rc.n, rc.system);
    switch (rc.kind) {
        case CaseKind::case1: {
            const Curve c = r1_curve(config, rc.grid);
            e.re.resize(steps);
            e.im.resize(steps);
            for (std::size_t i = 0; i < steps; ++i) {
                e.re[i] = c.values[i].real();
                e.im[i] = c.values[i].imag();
            }
            e.abs2 = r1_abs2_curve(config, rc.grid);  // Eq.-(3.14) route, not re^2+im^2
            e.plot = e.abs2;
            break;
        }
        case CaseKind::case2: {
            const Curve z = case2_curve(config, rc.j, rc.case2_block, rc.grid);
            e.re.resize(steps);
            e.im.resize(steps);
            e.abs2.resize(steps);
            for (std::size_t i = 0; i < steps; ++i) {
                e.re[i] = z.values[i].real();
                e.im[i] = z.values[i].imag();
                e.abs2[i] = std::norm(z.values[i]);
            }
            e.plot = e.re;
            break;
        }
        default: {
            const std::vector<double> v = plot_curve(rc, config, rc.grid);
            e.re = v;
            e.im.assign(steps, 0.0);
            e.abs2.resize(steps);
            for (std::size_t i = 0; i < steps; ++i)
                e.abs2[i] = v[i] * v[i];
            e.plot = v;
            break;
        }
    }
    return e;
}

struct AnalysisResult {
    DecoherenceReport report;
    double threshold_used = 0.0;
    double fluctuation_from = 0.0;
    bool analyzable = false;
};

AnalysisResult analyze_emitted(const RunConfig& rc, const Emitted& e) {
    AnalysisResult res;
    const double initial = e.abs2.front();
    const double thr = rc.threshold ? *rc.threshold : initial / std::numbers::e;
    res.threshold_used = thr;
    if (thr > 0.0 && thr < initial) {
        res.analyzable = true;
        res.report.threshold = thr;
        res.report.decoherence_time =
            decoherence_time(rc.grid, e.abs2, thr, rc.persistence);
        if (res.report.decoherence_time)
            res.report.recurrence_time =
                recurrence_search(rc.grid, e.abs2, 0.99 * initial);
    }
    res.fluctuation_from =
        res.report.decoherence_time
            ? *res.report.decoherence_time
            : rc.grid.t_start + 0.5 * (rc.grid.t_end - rc.grid.t_start);
    const auto stats = fluctuation_stats(rc.grid, e.plot, res.fluctuation_from);
    res.report.fluctuation_rms = stats.rms;
    res.report.fluctuation_max = stats.max_abs;
    return res;
}

void append_common_fields(std::vector<std::pair<std::string, std::string>>& f,
                          const RunConfig& rc) {
    f.emplace_back("case", case_name(rc.kind));
    f.emplace_back("n", std::to_string(rc.n));
    if (rc.kind == CaseKind::case3)
        f.emplace_back("p", std::to_string(rc.effective_p()));
    if (rc.kind == CaseKind::case2)
        f.emplace_back("j", std::to_string(rc.j));
    f.emplace_back("seed", std::to_string(rc.policy.seed));
    f.emplace_back("g_min", format_double(rc.policy.g_min));
    f.emplace_back("g_max", format_double(rc.policy.g_max));
    f.emplace_back("phase_mode", rc.policy.phase_mode == PhaseMode::real_amplitudes
                                     ? "real_amplitudes"
                                     : "random_phases");
    f.emplace_back("system_a", cplx_str(rc.system.a));
    f.emplace_back("system_b", cplx_str(rc.system.b));
    f.emplace_back("samples", std::to_string(rc.samples));
    f.emplace_back("t_start", format_double(rc.grid.t_start));
    f.emplace_back("t_end", format_double(rc.grid.t_end));
    f.emplace_back("steps", std::to_string(rc.grid.steps));
    f.emplace_back("strict_paper", rc.strict_paper ? "true" : "false");
    f.emplace_back("kernel_backend", kernels::backend_name(kernels::active_backend()));
}

void append_report_fields(std::vector<std::pair<std::string, std::string>>& f,
                          const AnalysisResult& res) {
    f.emplace_back("threshold", format_double(res.threshold_used));
    f.emplace_back("decoherence_time", opt_time(res.report.decoherence_time));
    f.emplace_back("fluctuation_from", format_double(res.fluctuation_from));
    f.emplace_back("fluctuation_rms", format_double(res.report.fluctuation_rms));
    f.emplace_back("fluctuation_max", format_double(res.report.fluctuation_max));
    f.emplace_back("recurrence_time", opt_time(res.report.recurrence_time));
}

void run_simulate_log_domain(const RunConfig& rc, const std::filesystem::path& dir) {
    const ModelConfig config = sample_model(rc.policy, rc.n, rc.system);
    const auto ts = rc.grid.times();
    std::vector<double> log_abs2(ts.size());
    std::vector<double> phase(ts.size());
    const auto blocks = rc.kind == CaseKind::case3 ? case3_blocks_for(rc)
                                                   : std::vector<ParticleObservable>{};
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const LogPoint pt = rc.kind == CaseKind::case1
                                ? r1_log(config, ts[i])
                                : case3_log(config, blocks, ts[i]);
        log_abs2[i] = 2.0 * pt.log_abs;
        phase[i] = pt.phase;
    }
    write_log_curve_csv((dir / "curve_log.csv").string(), ts, log_abs2, phase);

    std::vector<std::pair<std::string, std::string>> f;
    f.emplace_back("schema_version", "1");
    f.emplace_back("command", "simulate");
    append_common_fields(f, rc);
    f.emplace_back("product_mode", "log");
    f.emplace_back("curve_file", "curve_log.csv");
    write_summary((dir / "summary.txt").string(), f);
}

void write_simulation(const RunConfig& rc, const std::filesystem::path& dir,
                      const std::string& curve_name, const std::string& summary_name,
                      AnalysisResult* out_res) {
    const Emitted e = build_emitted(rc);
    write_curve_csv((dir / curve_name).string(), e.ts, e.re, e.im, e.abs2);
    const AnalysisResult res = analyze_emitted(rc, e);

    std::vector<std::pair<std::string, std::string>> f;
    f.emplace_back("schema_version", "1");
    f.emplace_back("command", "simulate");
    append_common_fields(f, rc);
    f.emplace_back("product_mode", "direct");
    f.emplace_back("curve_file", curve_name);
    f.emplace_back("metric_initial", format_double(e.abs2.front()));
    append_report_fields(f, res);
    write_summary((dir / summary_name).string(), f);
    if (out_res)
        *out_res = res;
}

ParticleObservable random_particle_block(Rng& rng) {
    const double e_uu = 2.0 * rng.next_unit() - 1.0;
    const double e_dd = 2.0 * rng.next_unit() - 1.0;
    const cplx e_ud(2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0);
    return {e_uu, e_dd, e_ud};
}

SystemObservable random_system_block(Rng& rng) {
    const double s_uu = 2.0 * rng.next_unit() - 1.0;
    const double s_dd = 2.0 * rng.next_unit() - 1.0;
    const cplx s_ud(2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0);
    return {s_uu, s_dd, s_ud};
}

}  // namespace

void RunConfig::validate() const {
    if (n < 1)
        throw std::invalid_argument("n: need at least one environment particle");
    if (kind == CaseKind::case2 && (j < 1 || j > n))
        throw std::invalid_argument("j: particle index " + std::to_string(j) +
                                    " outside 1.." + std::to_string(n));
    if (kind == CaseKind::case3) {
        const std::size_t pp = effective_p();
        if (pp < 1 || pp > n)
            throw std::invalid_argument("p: " + std::to_string(pp) + " exceeds N = " +
                                        std::to_string(n));
        if (case3_blocks && case3_blocks->size() != pp)
            throw std::invalid_argument("blocks: expected " + std::to_string(pp) +
                                        " entries, got " + std::to_string(case3_blocks->size()));
    }
    if (kind == CaseKind::general) {
        if (!observable)
            throw std::invalid_argument("observable: required for the general case");
        if (observable->particle_blocks.size() != n)
            throw std::invalid_argument("observable: " +
                                        std::to_string(observable->particle_blocks.size()) +
                                        " particle blocks for N = " + std::to_string(n));
    }
    if (samples < 1)
        throw std::invalid_argument("samples: must be >= 1");
    if (!(grid.t_end > grid.t_start))
        throw std::invalid_argument("t_max: must exceed t_start");
    if (grid.steps < 2)
        throw std::invalid_argument("steps: must be >= 2");
    policy.check();
    if (threshold && !(*threshold > 0.0))
        throw std::invalid_argument("threshold: must be positive");
    if (product_mode == ProductMode::log_domain && kind != CaseKind::case1 &&
        kind != CaseKind::case3)
        throw std::invalid_argument("product_mode: log mode supports case1 and case3 only");
    if (metric != "re" && metric != "abs2")
        throw std::invalid_argument("metric: must be 're' or 'abs2'");
    SystemQubit::checked(system.a, system.b);
}

void run_simulate(const RunConfig& rc) {
    rc.validate();
    const auto dir = ensure_out_dir(rc);
    if (rc.product_mode == ProductMode::log_domain) {
        run_simulate_log_domain(rc, dir);
        return;
    }
    write_simulation(rc, dir, "curve.csv", "summary.txt", nullptr);
}

double run_verify(const RunConfig& rc) {
    rc.validate();
    if (rc.samples != 1)
        throw std::invalid_argument("samples: verify runs on a single realization");
    if (rc.n > oracle::kMaxOracleQubits)
        throw std::invalid_argument("n: " + std::to_string(rc.n) +
                                    " exceeds oracle capacity; use N <= " +
                                    std::to_string(oracle::kMaxOracleQubits));
    const auto dir = ensure_out_dir(rc);
    const ModelConfig config = sample_model(rc.policy, rc.n, rc.system);
    Rng block_rng(splitmix64_at(rc.policy.seed, kBlockStreamIndex));

    ObservableSpec spec;
    std::function<double(double)> closed;
    switch (rc.kind) {
        case CaseKind::case1: {
            const SystemObservable sys_block = random_system_block(block_rng);
            spec = case1_spec(config, sys_block);
            // Eq.-(3.12) specialization through r1 rather than the general engine.
            const double diag = std::norm(config.system.a) * sys_block.s_uu +
                                std::norm(config.system.b) * sys_block.s_dd;
            const cplx crossc =
                config.system.a * std::conj(config.system.b) * std::conj(sys_block.s_ud);
            closed = [&config, diag, crossc](double t) {
                return diag + 2.0 * (crossc * r1(config, t)).real();
            };
            break;
        }
        case CaseKind::case2: {
            const ParticleObservable block = random_particle_block(block_rng);
            spec = case2_spec(config, rc.j, block);
            closed = [&config, block, j = rc.j](double t) {
                return case2_expectation(config, j, block, t);
            };
            break;
        }
        case CaseKind::case3: {
            std::vector<ParticleObservable> blocks(rc.effective_p());
            for (auto& b : blocks)
                b = random_particle_block(block_rng);
            spec = case3_spec(config, blocks);
            closed = [&config, blocks](double t) {
                return case3_expectation(config, blocks, t);
            };
            break;
        }
        default: {
            spec = *rc.observable;
            closed = [&config, &spec](double t) { return expectation(config, spec, t); };
            break;
        }
    }

    const bool corrupt = std::getenv("SPINBATH_TEST_CORRUPT_CLOSED_FORM") != nullptr;
    double max_dev = 0.0;
    double worst_t = rc.grid.t_start;
    for (const double t : rc.grid.times()) {
        double cf = closed(t);
        if (corrupt)
            cf += 1e-6;
        const double dev = std::abs(cf - oracle::expectation(config, spec, t));
        if (dev > max_dev) {
            max_dev = dev;
            worst_t = t;
        }
    }

    std::vector<std::pair<std::string, std::string>> f;
    f.emplace_back("schema_version", "1");
    f.emplace_back("command", "verify");
    append_common_fields(f, rc);
    f.emplace_back("max_deviation", format_double(max_dev));
    f.emplace_back("worst_t", format_double(worst_t));
    f.emplace_back("tolerance", format_double(kVerifyTolerance));
    f.emplace_back("status", max_dev <= kVerifyTolerance ? "pass" : "fail");
    write_summary((dir / "verify.txt").string(), f);
    return max_dev;
}

void run_sweep(const RunConfig& rc, const SweepSpec& sweep) {
    if (sweep.param != "n" && sweep.param != "p" && sweep.param != "samples")
        throw std::invalid_argument("sweep param: must be one of n, p, samples");
    if (sweep.values.empty())
        throw std::invalid_argument("sweep values: need at least one value");
    rc.validate();
    const auto dir = ensure_out_dir(rc);

    std::vector<std::string> rows;
    for (const std::size_t value : sweep.values) {
        RunConfig step = rc;
        if (sweep.param == "n") {
            step.n = value;
        } else if (sweep.param == "p") {
            step.p = value;
            if (step.n < value)
                step.n = value;
            step.case3_blocks.reset();  // re-derive defaults at the new p
        } else {
            step.samples = value;
        }
        step.validate();
        const std::string curve_name = "curve_" + sweep.param + std::to_string(value) + ".csv";
        AnalysisResult res;
        write_simulation(step, dir, curve_name,
                         "summary_" + sweep.param + std::to_string(value) + ".txt", &res);
        rows.push_back(std::to_string(value) + "," + opt_time(res.report.decoherence_time) +
                       "," + format_double(res.report.fluctuation_rms));
    }

    std::ofstream agg(dir / "sweep.csv");
    if (!agg)
        throw IoError("cannot open sweep.csv for writing");
    agg << "value,decoherence_time,fluctuation_rms\n";
    for (const auto& row : rows)
        agg << row << '\n';
    if (!agg.flush())
        throw IoError("write failed for sweep.csv");
}

void run_envelope(const RunConfig& rc) {
    rc.validate();
    const auto dir = ensure_out_dir(rc);
    const ModelConfig config = sample_model(rc.policy, rc.n, rc.system);
    const EnvelopeBounds bounds = envelope_bounds(config);
    const auto scan = r1_abs2_curve(config, rc.grid);
    double scan_min = scan.front();
    double scan_max = scan.front();
    for (const double v : scan) {
        scan_min = std::min(scan_min, v);
        scan_max = std::max(scan_max, v);
    }

    const auto ts = rc.grid.times();
    const Curve c = r1_curve(config, rc.grid);
    std::vector<double> re(ts.size());
    std::vector<double> im(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        re[i] = c.values[i].real();
        im[i] = c.values[i].imag();
    }
    write_curve_csv((dir / "curve.csv").string(), ts, re, im, scan);

    std::vector<std::pair<std::string, std::string>> f;
    f.emplace_back("schema_version", "1");
    f.emplace_back("command", "envelope");
    append_common_fields(f, rc);
    f.emplace_back("min_product", format_double(bounds.min_product));
    f.emplace_back("max_product", format_double(bounds.max_product));
    f.emplace_back("bounds_simultaneous", bounds.simultaneous ? "true" : "false");
    f.emplace_back("scan_min", format_double(scan_min));
    f.emplace_back("scan_max", format_double(scan_max));
    f.emplace_back("min_gap", format_double(scan_min - bounds.min_product));
    f.emplace_back("max_gap", format_double(bounds.max_product - scan_max));
    write_summary((dir / "envelope.txt").string(), f);
}

void run_recurrence(const RunConfig& rc) {
    rc.validate();
    const auto dir = ensure_out_dir(rc);
    const Emitted e = build_emitted(rc);
    const std::vector<double>& values = rc.metric == "abs2" ? e.abs2 : e.re;
    const double threshold = rc.threshold ? *rc.threshold : 0.99 * values.front();
    const auto recurrence = recurrence_search(rc.grid, values, threshold);

    std::vector<std::pair<std::string, std::string>> f;
    f.emplace_back("schema_version", "1");
    f.emplace_back("command", "recurrence");
    append_common_fields(f, rc);
    f.emplace_back("metric", rc.metric);
    f.emplace_back("threshold", format_double(threshold));
    f.emplace_back("recurrence_time", opt_time(recurrence));
    write_summary((dir / "recurrence.txt").string(), f);
}

namespace {

cplx json_cplx(const json& v, const std::string& field) {
    if (v.is_number())
        return cplx(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return cplx(v[0].get<double>(), v[1].get<double>());
    throw std::invalid_argument("config file: " + field + " must be a number or [re, im]");
}

ParticleObservable json_particle_block(const json& v, const std::string& field) {
    ParticleObservable b;
    b.e_uu = v.at("e_uu").get<double>();
    b.e_dd = v.at("e_dd").get<double>();
    b.e_ud = json_cplx(v.at("e_ud"), field + ".e_ud");
    return b;
}

}  // namespace

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument("config file: " + std::string(e.what()));
    }

    RunConfig rc;
    try {
        if (doc.at("schema_version").get<int>() != 1)
            throw std::invalid_argument("config file: unsupported schema_version");
        if (doc.contains("case")) {
            const std::string c = doc["case"].get<std::string>();
            const std::map<std::string, CaseKind> kinds{{"1", CaseKind::case1},
                                                        {"case1", CaseKind::case1},
                                                        {"2", CaseKind::case2},
                                                        {"case2", CaseKind::case2},
                                                        {"3", CaseKind::case3},
                                                        {"case3", CaseKind::case3},
                                                        {"general", CaseKind::general}};
            const auto it = kinds.find(c);
            if (it == kinds.end())
                throw std::invalid_argument("config file: case: unknown value '" + c + "'");
            rc.kind = it->second;
        }
        if (doc.contains("n"))
            rc.n = doc["n"].get<std::size_t>();
        if (doc.contains("p"))
            rc.p = doc["p"].get<std::size_t>();
        if (doc.contains("j"))
            rc.j = doc["j"].get<std::size_t>();
        if (doc.contains("seed"))
            rc.policy.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("g_min"))
            rc.policy.g_min = doc["g_min"].get<double>();
        if (doc.contains("g_max"))
            rc.policy.g_max = doc["g_max"].get<double>();
        if (doc.contains("phase_mode")) {
            const std::string m = doc["phase_mode"].get<std::string>();
            if (m == "real_amplitudes")
                rc.policy.phase_mode = PhaseMode::real_amplitudes;
            else if (m == "random_phases")
                rc.policy.phase_mode = PhaseMode::random_phases;
            else
                throw std::invalid_argument("config file: phase_mode: unknown value '" + m + "'");
        }
        if (doc.contains("system")) {
            rc.system.a = json_cplx(doc["system"].at("a"), "system.a");
            rc.system.b = json_cplx(doc["system"].at("b"), "system.b");
        }
        if (doc.contains("grid")) {
            const auto& g = doc["grid"];
            if (g.contains("t_start"))
                rc.grid.t_start = g["t_start"].get<double>();
            if (g.contains("t_max"))
                rc.grid.t_end = g["t_max"].get<double>();
            if (g.contains("steps"))
                rc.grid.steps = g["steps"].get<std::size_t>();
        }
        if (doc.contains("threshold"))
            rc.threshold = doc["threshold"].get<double>();
        if (doc.contains("persistence"))
            rc.persistence = doc["persistence"].get<std::size_t>();
        if (doc.contains("samples"))
            rc.samples = doc["samples"].get<std::size_t>();
        if (doc.contains("strict_paper"))
            rc.strict_paper = doc["strict_paper"].get<bool>();
        if (doc.contains("product_mode")) {
            const std::string m = doc["product_mode"].get<std::string>();
            if (m == "direct")
                rc.product_mode = ProductMode::direct;
            else if (m == "log")
                rc.product_mode = ProductMode::log_domain;
            else
                throw std::invalid_argument("config file: product_mode: unknown value '" + m +
                                            "'");
        }
        if (doc.contains("metric"))
            rc.metric = doc["metric"].get<std::string>();
        if (doc.contains("out_dir"))
            rc.out_dir = doc["out_dir"].get<std::string>();
        if (doc.contains("block"))
            rc.case2_block = json_particle_block(doc["block"], "block");
        if (doc.contains("blocks")) {
            std::vector<ParticleObservable> blocks;
            for (std::size_t i = 0; i < doc["blocks"].size(); ++i)
                blocks.push_back(
                    json_particle_block(doc["blocks"][i], "blocks[" + std::to_string(i) + "]"));
            rc.case3_blocks = std::move(blocks);
        }
        if (doc.contains("observable")) {
            const auto& o = doc["observable"];
            ObservableSpec spec;
            spec.system_block.s_uu = o.at("system").at("s_uu").get<double>();
            spec.system_block.s_dd = o.at("system").at("s_dd").get<double>();
            spec.system_block.s_ud = json_cplx(o.at("system").at("s_ud"), "observable.system.s_ud");
            for (std::size_t i = 0; i < o.at("particles").size(); ++i)
                spec.particle_blocks.push_back(json_particle_block(
                    o["particles"][i], "observable.particles[" + std::to_string(i) + "]"));
            rc.observable = std::move(spec);
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument("config file: " + std::string(e.what()));
    }
    return rc;
}

int run_cli(int argc, const char* const* argv) {
    RunConfig rc;

    // --config seeds the defaults; explicit flags then override its values.
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc)
            path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0)
            path = arg.substr(9);
        if (!path.empty()) {
            try {
                rc = parse_config_file(path);
            } catch (const IoError& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitIo;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitUsage;
            }
            break;
        }
    }
    if (rc.out_dir.empty()) {
        if (const char* env = std::getenv("SPINBATH_OUT_DIR"))
            rc.out_dir = env;
    }

    CLI::App app{"Exact expectation-value dynamics of the spin-bath model"};
    app.require_subcommand(1);

    SweepSpec sweep;
    std::string config_path;  // consumed above; registered for help/validation

    const std::map<std::string, CaseKind> case_map{
        {"1", CaseKind::case1},   {"case1", CaseKind::case1}, {"2", CaseKind::case2},
        {"case2", CaseKind::case2}, {"3", CaseKind::case3},   {"case3", CaseKind::case3},
        {"general", CaseKind::general}};
    const std::map<std::string, PhaseMode> phase_map{
        {"real_amplitudes", PhaseMode::real_amplitudes},
        {"random_phases", PhaseMode::random_phases}};
    const std::map<std::string, ProductMode> product_map{
        {"direct", ProductMode::direct}, {"log", ProductMode::log_domain}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run config (flags override it)");
        sub->add_option("--case", rc.kind, "system/environment split: 1|2|3|general")
            ->transform(CLI::CheckedTransformer(case_map, CLI::ignore_case));
        sub->add_option("--n", rc.n, "number of environment particles");
        sub->add_option("--p", rc.p, "observed particle count (case 3)");
        sub->add_option("--j", rc.j, "observed particle index (case 2, 1-based)");
        sub->add_option("--seed", rc.policy.seed, "RNG seed");
        sub->add_option("--g-min", rc.policy.g_min, "coupling range lower edge");
        sub->add_option("--g-max", rc.policy.g_max, "coupling range upper edge");
        sub->add_option("--phase-mode", rc.policy.phase_mode, "amplitude phase sampling")
            ->transform(CLI::CheckedTransformer(phase_map, CLI::ignore_case));
        sub->add_option("--t-start", rc.grid.t_start, "grid start time");
        sub->add_option("--t-max", rc.grid.t_end, "grid end time");
        sub->add_option("--steps", rc.grid.steps, "grid point count");
        sub->add_option("--threshold", rc.threshold, "analysis threshold (absolute)");
        sub->add_option("--persistence", rc.persistence,
                        "samples a crossing must stay below the threshold");
        sub->add_option("--samples", rc.samples, "ensemble size (1 = single realization)");
        sub->add_option("--out", rc.out_dir, "output directory (default $SPINBATH_OUT_DIR or .)");
        sub->add_flag("--strict-paper", rc.strict_paper,
                      "use the case-2 expectation exactly as printed");
        sub->add_option("--product-mode", rc.product_mode, "direct|log")
            ->transform(CLI::CheckedTransformer(product_map, CLI::ignore_case));
    };

    CLI::App* simulate = app.add_subcommand("simulate", "emit one curve and its report");
    add_common(simulate);
    CLI::App* verify = app.add_subcommand("verify", "closed form vs brute-force oracle");
    add_common(verify);
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "repeat a run across parameter values");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--param", sweep.param, "swept parameter: n|p|samples")
        ->required()
        ->transform(CLI::IsMember({"n", "p", "samples"}, CLI::ignore_case));
    sweep_cmd->add_option("--values", sweep.values, "swept values")->required()->delimiter(',');
    CLI::App* envelope = app.add_subcommand("envelope", "|r1|^2 bounds and scan attainment");
    add_common(envelope);
    CLI::App* recurrence = app.add_subcommand("recurrence", "windowed recurrence search");
    add_common(recurrence);
    recurrence->add_option("--metric", rc.metric, "searched metric: re|abs2")
        ->transform(CLI::IsMember({"re", "abs2"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            run_simulate(rc);
        } else if (verify->parsed()) {
            const double dev = run_verify(rc);
            if (dev > kVerifyTolerance) {
                std::cerr << "verification FAILED: max deviation " << format_double(dev)
                          << " > " << format_double(kVerifyTolerance) << '\n';
                return kExitVerifyFailure;
            }
            std::cout << "verification passed: max deviation " << format_double(dev) << '\n';
        } else if (sweep_cmd->parsed()) {
            run_sweep(rc, sweep);
        } else if (envelope->parsed()) {
            run_envelope(rc);
        } else if (recurrence->parsed()) {
            run_recurrence(rc);
        }
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace spinbath::cli
