#pragma once

#include <functional>
#include <span>
#include <vector>

#include "spinbath/kernels/curve_kernels.hpp"
#include "spinbath/model.hpp"
#include "spinbath/types.hpp"

namespace spinbath {

/// Eq. (4-1.3) third-term handling: the oracle-confirmed factor
/// 2 Re(conj(alpha) beta eps e^{-igt}) vs the form printed in the paper,
/// Re(alpha conj(beta) eps e^{+igt}).
enum class Case2Form { oracle_consistent, strict_paper };

// --- per-particle coefficient builders (canonical evaluation path) ---------

kernels::RealCoef gamma0_coef(const EnvQubit& q, const ParticleObservable& b);
kernels::CplxCoef gamma1_coef(const EnvQubit& q, const ParticleObservable& b);
kernels::Abs2Coef abs2_coef(const EnvQubit& q);

std::vector<kernels::RealCoef> gamma0_coefs(const ModelConfig&, const ObservableSpec&);
std::vector<kernels::CplxCoef> gamma1_coefs(const ModelConfig&, const ObservableSpec&);
std::vector<kernels::CplxCoef> r1_coefs(const ModelConfig&);
std::vector<kernels::Abs2Coef> r1_abs2_coefs(const ModelConfig&);
std::vector<kernels::RealCoef> case3_coefs(const ModelConfig&,
                                           std::span<const ParticleObservable> blocks);

// --- single-point evaluators ------------------------------------------------

/// Diagonal-branch product factor of the general expectation value.
cplx gamma0(const ModelConfig&, const ObservableSpec&, double t);

/// Cross-branch product factor of the general expectation value.
cplx gamma1(const ModelConfig&, const ObservableSpec&, double t);

/// General expectation value: (|a|^2 s_uu + |b|^2 s_dd) Gamma0
/// + 2 Re[a conj(b) conj(s_ud) Gamma1]. Throws if the imaginary residue
/// exceeds 1e-9.
double expectation(const ModelConfig&, const ObservableSpec&, double t);

/// Case-1 cross coefficient: prod_i (|alpha_i|^2 e^{+igt} + |beta_i|^2 e^{-igt}).
cplx r1(const ModelConfig&, double t);

/// |r1|^2 evaluated from its own product form (not by squaring r1).
double r1_abs2(const ModelConfig&, double t);

/// Case-2 oscillating term as printed: Re(alpha_j conj(beta_j) eps e^{+ig_j t}).
double r2(const ModelConfig&, std::size_t j, const ParticleObservable& block, double t);

double case2_expectation(const ModelConfig&, std::size_t j, const ParticleObservable& block,
                         double t, Case2Form form = Case2Form::oracle_consistent);

/// Case-3 expectation: product over the first p observed particles only;
/// bit-independent of any particles beyond p.
double case3_expectation(const ModelConfig&, std::span<const ParticleObservable> blocks,
                         double t);

/// Case-3 with zero-diagonal blocks: prod_i 2 Re(conj(alpha) beta eps_i e^{-ig_i t}).
double r3(const ModelConfig&, std::span<const cplx> eps_ud, double t);

// --- sampled curves -----------------------------------------------------------

/// Evaluate f at each grid point in order.
Curve sample_curve(const std::function<cplx(double)>& f, const TimeGrid& grid);

Curve r1_curve(const ModelConfig&, const TimeGrid&);
std::vector<double> r1_abs2_curve(const ModelConfig&, const TimeGrid&);
Curve case2_curve(const ModelConfig&, std::size_t j, const ParticleObservable& block,
                  const TimeGrid&);
std::vector<double> case3_curve(const ModelConfig&, std::span<const ParticleObservable> blocks,
                                const TimeGrid&);
std::vector<double> r3_curve(const ModelConfig&, std::span<const cplx> eps_ud, const TimeGrid&);
std::vector<double> expectation_curve(const ModelConfig&, const ObservableSpec&, const TimeGrid&);

// --- log-domain evaluation (direct products underflow near N ~ 2400) --------

struct LogPoint {
    double log_abs;  // natural log of the magnitude; -inf when the value is 0
    double phase;    // argument folded to (-pi, pi]
};

LogPoint r1_log(const ModelConfig&, double t);
LogPoint case3_log(const ModelConfig&, std::span<const ParticleObservable> blocks, double t);

}  // namespace spinbath
