#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace spinbath::kernels {

// Per-particle factor coefficients, precomputed once per curve evaluation.
// Scalar and AVX2 variants of each kernel consume identical coefficient and
// time arrays and produce bit-identical output (trig is scalar libm in both
// paths; the build disables FP contraction).

/// factor(t) = c4 + k2 * cos(two_g * t)      — |r1|^2 products (Case 1)
struct Abs2Coef {
    double c4;
    double k2;
    double two_g;
};

/// factor(t) = d + p*cos(g t) + q*sin(g t)   — real Gamma0-type products (Case 3)
struct RealCoef {
    double d;
    double p;
    double q;
    double g;
};

/// factor(t) = sum*cos(g t) + cross + i*diff*sin(g t)   — Gamma1 / r1 products
struct CplxCoef {
    double sum;
    double diff;
    double cross;
    double g;
};

namespace detail {

inline double abs2_factor(const Abs2Coef& c, double t) {
    return c.c4 + c.k2 * std::cos(c.two_g * t);
}

inline double real_factor(const RealCoef& c, double t) {
    const double a = c.g * t;
    return c.d + c.p * std::cos(a) + c.q * std::sin(a);
}

inline void cplx_factor(const CplxCoef& c, double t, double& fr, double& fi) {
    const double a = c.g * t;
    fr = c.sum * std::cos(a) + c.cross;
    fi = c.diff * std::sin(a);
}

// (pr, pi) *= (fr, fi), fixed operation order shared by all variants.
inline void cmul_acc(double& pr, double& pi, double fr, double fi) {
    const double nr = pr * fr - pi * fi;
    const double ni = pr * fi + pi * fr;
    pr = nr;
    pi = ni;
}

inline double abs2_product_point(std::span<const Abs2Coef> coefs, double t) {
    double prod = 1.0;
    for (const auto& c : coefs)
        prod *= abs2_factor(c, t);
    return prod;
}

inline double real_product_point(std::span<const RealCoef> coefs, double t) {
    double prod = 1.0;
    for (const auto& c : coefs)
        prod *= real_factor(c, t);
    return prod;
}

inline void cplx_product_point(std::span<const CplxCoef> coefs, double t, double& re, double& im) {
    double pr = 1.0;
    double pi = 0.0;
    for (const auto& c : coefs) {
        double fr;
        double fi;
        cplx_factor(c, t, fr, fi);
        cmul_acc(pr, pi, fr, fi);
    }
    re = pr;
    im = pi;
}

}  // namespace detail

// Dispatched entry points: out[j] = product over coefs evaluated at ts[j].
void abs2_product(std::span<const Abs2Coef> coefs, std::span<const double> ts,
                  std::span<double> out);
void real_product(std::span<const RealCoef> coefs, std::span<const double> ts,
                  std::span<double> out);
void cplx_product(std::span<const CplxCoef> coefs, std::span<const double> ts,
                  std::span<double> out_re, std::span<double> out_im);

namespace scalar {
void abs2_product(std::span<const Abs2Coef>, std::span<const double>, std::span<double>);
void real_product(std::span<const RealCoef>, std::span<const double>, std::span<double>);
void cplx_product(std::span<const CplxCoef>, std::span<const double>, std::span<double>,
                  std::span<double>);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define SPINBATH_HAVE_AVX2_KERNELS 1
namespace avx2 {
void abs2_product(std::span<const Abs2Coef>, std::span<const double>, std::span<double>);
void real_product(std::span<const RealCoef>, std::span<const double>, std::span<double>);
void cplx_product(std::span<const CplxCoef>, std::span<const double>, std::span<double>,
                  std::span<double>);
}  // namespace avx2
#else
#define SPINBATH_HAVE_AVX2_KERNELS 0
#endif

}  // namespace spinbath::kernels
