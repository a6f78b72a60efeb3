#include "spinbath/closed_form.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spinbath {

using kernels::Abs2Coef;
using kernels::CplxCoef;
using kernels::RealCoef;

namespace {

void check_spec(const ModelConfig& config, const ObservableSpec& spec) {
    if (spec.particle_blocks.size() != config.n())
        throw std::invalid_argument("ObservableSpec has " +
                                    std::to_string(spec.particle_blocks.size()) +
                                    " particle blocks for N = " + std::to_string(config.n()));
}

void check_particle_index(const ModelConfig& config, std::size_t j) {
    if (j < 1 || j > config.n())
        throw std::out_of_range("particle index j = " + std::to_string(j) + " outside 1.." +
                                std::to_string(config.n()));
}

void check_p(const ModelConfig& config, std::size_t p) {
    if (p < 1 || p > config.n())
        throw std::out_of_range("p = " + std::to_string(p) + " outside 1.." +
                                std::to_string(config.n()));
}

double fold_phase(double phi) { return std::remainder(phi, 2.0 * std::numbers::pi); }

}  // namespace

RealCoef gamma0_coef(const EnvQubit& q, const ParticleObservable& b) {
    const double a2 = std::norm(q.alpha);
    const double b2 = std::norm(q.beta);
    const cplx w = std::conj(q.alpha) * q.beta * b.e_ud;
    return {a2 * b.e_uu + b2 * b.e_dd, 2.0 * w.real(), 2.0 * w.imag(), q.g};
}

CplxCoef gamma1_coef(const EnvQubit& q, const ParticleObservable& b) {
    const double up = std::norm(q.alpha) * b.e_uu;
    const double down = std::norm(q.beta) * b.e_dd;
    const cplx w = std::conj(q.alpha) * q.beta * b.e_ud;
    return {up + down, up - down, 2.0 * w.real(), q.g};
}

Abs2Coef abs2_coef(const EnvQubit& q) {
    const double a2 = std::norm(q.alpha);
    const double b2 = std::norm(q.beta);
    return {a2 * a2 + b2 * b2, 2.0 * (a2 * b2), 2.0 * q.g};
}

std::vector<RealCoef> gamma0_coefs(const ModelConfig& config, const ObservableSpec& spec) {
    check_spec(config, spec);
    std::vector<RealCoef> coefs;
    coefs.reserve(config.n());
    for (std::size_t i = 0; i < config.n(); ++i)
        coefs.push_back(gamma0_coef(config.env[i], spec.particle_blocks[i]));
    return coefs;
}

std::vector<CplxCoef> gamma1_coefs(const ModelConfig& config, const ObservableSpec& spec) {
    check_spec(config, spec);
    std::vector<CplxCoef> coefs;
    coefs.reserve(config.n());
    for (std::size_t i = 0; i < config.n(); ++i)
        coefs.push_back(gamma1_coef(config.env[i], spec.particle_blocks[i]));
    return coefs;
}

std::vector<CplxCoef> r1_coefs(const ModelConfig& config) {
    // Identity blocks make gamma1's factor exactly the r1 factor, bit for bit.
    std::vector<CplxCoef> coefs;
    coefs.reserve(config.n());
    for (const auto& q : config.env)
        coefs.push_back(gamma1_coef(q, identity_particle_block()));
    return coefs;
}

std::vector<Abs2Coef> r1_abs2_coefs(const ModelConfig& config) {
    std::vector<Abs2Coef> coefs;
    coefs.reserve(config.n());
    for (const auto& q : config.env)
        coefs.push_back(abs2_coef(q));
    return coefs;
}

std::vector<RealCoef> case3_coefs(const ModelConfig& config,
                                  std::span<const ParticleObservable> blocks) {
    check_p(config, blocks.size());
    std::vector<RealCoef> coefs;
    coefs.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        coefs.push_back(gamma0_coef(config.env[i], blocks[i]));
    return coefs;
}

cplx gamma0(const ModelConfig& config, const ObservableSpec& spec, double t) {
    const auto coefs = gamma0_coefs(config, spec);
    return {kernels::detail::real_product_point(coefs, t), 0.0};
}

cplx gamma1(const ModelConfig& config, const ObservableSpec& spec, double t) {
    const auto coefs = gamma1_coefs(config, spec);
    double re;
    double im;
    kernels::detail::cplx_product_point(coefs, t, re, im);
    return {re, im};
}

double expectation(const ModelConfig& config, const ObservableSpec& spec, double t) {
    const double diag = std::norm(config.system.a) * spec.system_block.s_uu +
                        std::norm(config.system.b) * spec.system_block.s_dd;
    const cplx g0 = gamma0(config, spec, t);
    const cplx g1 = gamma1(config, spec, t);
    const cplx cross =
        config.system.a * std::conj(config.system.b) * std::conj(spec.system_block.s_ud) * g1;
    const double residue = std::abs(diag * g0.imag());
    if (residue > 1e-9)
        throw std::runtime_error("expectation: imaginary residue " + std::to_string(residue) +
                                 " exceeds 1e-9");
    return diag * g0.real() + 2.0 * cross.real();
}

cplx r1(const ModelConfig& config, double t) {
    const auto coefs = r1_coefs(config);
    double re;
    double im;
    kernels::detail::cplx_product_point(coefs, t, re, im);
    return {re, im};
}

double r1_abs2(const ModelConfig& config, double t) {
    const auto coefs = r1_abs2_coefs(config);
    return kernels::detail::abs2_product_point(coefs, t);
}

double r2(const ModelConfig& config, std::size_t j, const ParticleObservable& block, double t) {
    check_particle_index(config, j);
    const EnvQubit& q = config.env[j - 1];
    const cplx w = q.alpha * std::conj(q.beta) * block.e_ud;
    const double arg = q.g * t;
    return (w * cplx(std::cos(arg), std::sin(arg))).real();
}

double case2_expectation(const ModelConfig& config, std::size_t j, const ParticleObservable& block,
                         double t, Case2Form form) {
    check_particle_index(config, j);
    const EnvQubit& q = config.env[j - 1];
    if (form == Case2Form::strict_paper) {
        const double diag = std::norm(q.alpha) * block.e_uu + std::norm(q.beta) * block.e_dd;
        return diag + r2(config, j, block, t);
    }
    // Oracle-consistent form: exactly the j-th Gamma0 factor.
    return kernels::detail::real_factor(gamma0_coef(q, block), t);
}

double case3_expectation(const ModelConfig& config, std::span<const ParticleObservable> blocks,
                         double t) {
    const auto coefs = case3_coefs(config, blocks);
    return kernels::detail::real_product_point(coefs, t);
}

double r3(const ModelConfig& config, std::span<const cplx> eps_ud, double t) {
    check_p(config, eps_ud.size());
    std::vector<ParticleObservable> blocks(eps_ud.size());
    for (std::size_t i = 0; i < eps_ud.size(); ++i)
        blocks[i] = {0.0, 0.0, eps_ud[i]};
    return case3_expectation(config, blocks, t);
}

Curve sample_curve(const std::function<cplx(double)>& f, const TimeGrid& grid) {
    Curve curve{grid, {}};
    curve.values.reserve(grid.steps);
    for (double t : grid.times())
        curve.values.push_back(f(t));
    return curve;
}

Curve r1_curve(const ModelConfig& config, const TimeGrid& grid) {
    const auto coefs = r1_coefs(config);
    const auto ts = grid.times();
    std::vector<double> re(ts.size());
    std::vector<double> im(ts.size());
    kernels::cplx_product(coefs, ts, re, im);
    Curve curve{grid, std::vector<cplx>(ts.size())};
    for (std::size_t j = 0; j < ts.size(); ++j)
        curve.values[j] = {re[j], im[j]};
    return curve;
}

std::vector<double> r1_abs2_curve(const ModelConfig& config, const TimeGrid& grid) {
    const auto coefs = r1_abs2_coefs(config);
    const auto ts = grid.times();
    std::vector<double> out(ts.size());
    kernels::abs2_product(coefs, ts, out);
    return out;
}

Curve case2_curve(const ModelConfig& config, std::size_t j, const ParticleObservable& block,
                  const TimeGrid& grid) {
    check_particle_index(config, j);
    const EnvQubit& q = config.env[j - 1];
    const cplx w = q.alpha * std::conj(q.beta) * block.e_ud;
    Curve curve{grid, {}};
    curve.values.reserve(grid.steps);
    for (double t : grid.times()) {
        const double arg = q.g * t;
        curve.values.push_back(w * cplx(std::cos(arg), std::sin(arg)));
    }
    return curve;
}

std::vector<double> case3_curve(const ModelConfig& config,
                                std::span<const ParticleObservable> blocks, const TimeGrid& grid) {
    const auto coefs = case3_coefs(config, blocks);
    const auto ts = grid.times();
    std::vector<double> out(ts.size());
    kernels::real_product(coefs, ts, out);
    return out;
}

std::vector<double> r3_curve(const ModelConfig& config, std::span<const cplx> eps_ud,
                             const TimeGrid& grid) {
    check_p(config, eps_ud.size());
    std::vector<ParticleObservable> blocks(eps_ud.size());
    for (std::size_t i = 0; i < eps_ud.size(); ++i)
        blocks[i] = {0.0, 0.0, eps_ud[i]};
    return case3_curve(config, blocks, grid);
}

std::vector<double> expectation_curve(const ModelConfig& config, const ObservableSpec& spec,
                                      const TimeGrid& grid) {
    const double diag = std::norm(config.system.a) * spec.system_block.s_uu +
                        std::norm(config.system.b) * spec.system_block.s_dd;
    const cplx crossc =
        config.system.a * std::conj(config.system.b) * std::conj(spec.system_block.s_ud);
    const auto g0c = gamma0_coefs(config, spec);
    const auto g1c = gamma1_coefs(config, spec);
    const auto ts = grid.times();
    std::vector<double> g0(ts.size());
    std::vector<double> g1re(ts.size());
    std::vector<double> g1im(ts.size());
    kernels::real_product(g0c, ts, g0);
    kernels::cplx_product(g1c, ts, g1re, g1im);
    std::vector<double> out(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j)
        out[j] = diag * g0[j] + 2.0 * (crossc * cplx(g1re[j], g1im[j])).real();
    return out;
}

LogPoint r1_log(const ModelConfig& config, double t) {
    const auto coefs = r1_coefs(config);
    double log_abs = 0.0;
    double phase = 0.0;
    for (const auto& c : coefs) {
        double fr;
        double fi;
        kernels::detail::cplx_factor(c, t, fr, fi);
        const double mag2 = fr * fr + fi * fi;
        if (mag2 == 0.0)
            return {-std::numeric_limits<double>::infinity(), 0.0};
        log_abs += 0.5 * std::log(mag2);
        phase += std::atan2(fi, fr);
    }
    return {log_abs, fold_phase(phase)};
}

LogPoint case3_log(const ModelConfig& config, std::span<const ParticleObservable> blocks,
                   double t) {
    const auto coefs = case3_coefs(config, blocks);
    double log_abs = 0.0;
    bool negative = false;
    for (const auto& c : coefs) {
        const double f = kernels::detail::real_factor(c, t);
        if (f == 0.0)
            return {-std::numeric_limits<double>::infinity(), 0.0};
        log_abs += std::log(std::abs(f));
        negative ^= (f < 0.0);
    }
    return {log_abs, negative ? std::numbers::pi : 0.0};
}

}  // namespace spinbath
