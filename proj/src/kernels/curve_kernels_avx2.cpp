#include "spinbath/kernels/curve_kernels.hpp"

#if SPINBATH_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cmath>

// Lanes carry four adjacent grid times; the particle loop stays sequential
// per lane so every lane performs the scalar kernel's operation sequence.
// cos/sin are the same libm calls the scalar path makes.

namespace spinbath::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d cos4(__m256d a) {
    alignas(32) double v[kLanes];
    _mm256_store_pd(v, a);
    v[0] = std::cos(v[0]);
    v[1] = std::cos(v[1]);
    v[2] = std::cos(v[2]);
    v[3] = std::cos(v[3]);
    return _mm256_load_pd(v);
}

inline __m256d sin4(__m256d a) {
    alignas(32) double v[kLanes];
    _mm256_store_pd(v, a);
    v[0] = std::sin(v[0]);
    v[1] = std::sin(v[1]);
    v[2] = std::sin(v[2]);
    v[3] = std::sin(v[3]);
    return _mm256_load_pd(v);
}

}  // namespace

void abs2_product(std::span<const Abs2Coef> coefs, std::span<const double> ts,
                  std::span<double> out) {
    const std::size_t main = ts.size() - ts.size() % kLanes;
    for (std::size_t j = 0; j < main; j += kLanes) {
        const __m256d t = _mm256_loadu_pd(ts.data() + j);
        __m256d prod = _mm256_set1_pd(1.0);
        for (const auto& c : coefs) {
            const __m256d arg = _mm256_mul_pd(_mm256_set1_pd(c.two_g), t);
            const __m256d factor = _mm256_add_pd(
                _mm256_set1_pd(c.c4), _mm256_mul_pd(_mm256_set1_pd(c.k2), cos4(arg)));
            prod = _mm256_mul_pd(prod, factor);
        }
        _mm256_storeu_pd(out.data() + j, prod);
    }
    for (std::size_t j = main; j < ts.size(); ++j)
        out[j] = detail::abs2_product_point(coefs, ts[j]);
}

void real_product(std::span<const RealCoef> coefs, std::span<const double> ts,
                  std::span<double> out) {
    const std::size_t main = ts.size() - ts.size() % kLanes;
    for (std::size_t j = 0; j < main; j += kLanes) {
        const __m256d t = _mm256_loadu_pd(ts.data() + j);
        __m256d prod = _mm256_set1_pd(1.0);
        for (const auto& c : coefs) {
            const __m256d arg = _mm256_mul_pd(_mm256_set1_pd(c.g), t);
            const __m256d factor = _mm256_add_pd(
                _mm256_add_pd(_mm256_set1_pd(c.d),
                              _mm256_mul_pd(_mm256_set1_pd(c.p), cos4(arg))),
                _mm256_mul_pd(_mm256_set1_pd(c.q), sin4(arg)));
            prod = _mm256_mul_pd(prod, factor);
        }
        _mm256_storeu_pd(out.data() + j, prod);
    }
    for (std::size_t j = main; j < ts.size(); ++j)
        out[j] = detail::real_product_point(coefs, ts[j]);
}

void cplx_product(std::span<const CplxCoef> coefs, std::span<const double> ts,
                  std::span<double> out_re, std::span<double> out_im) {
    const std::size_t main = ts.size() - ts.size() % kLanes;
    for (std::size_t j = 0; j < main; j += kLanes) {
        const __m256d t = _mm256_loadu_pd(ts.data() + j);
        __m256d pr = _mm256_set1_pd(1.0);
        __m256d pi = _mm256_set1_pd(0.0);
        for (const auto& c : coefs) {
            const __m256d arg = _mm256_mul_pd(_mm256_set1_pd(c.g), t);
            const __m256d fr = _mm256_add_pd(
                _mm256_mul_pd(_mm256_set1_pd(c.sum), cos4(arg)), _mm256_set1_pd(c.cross));
            const __m256d fi = _mm256_mul_pd(_mm256_set1_pd(c.diff), sin4(arg));
            const __m256d nr = _mm256_sub_pd(_mm256_mul_pd(pr, fr), _mm256_mul_pd(pi, fi));
            const __m256d ni = _mm256_add_pd(_mm256_mul_pd(pr, fi), _mm256_mul_pd(pi, fr));
            pr = nr;
            pi = ni;
        }
        _mm256_storeu_pd(out_re.data() + j, pr);
        _mm256_storeu_pd(out_im.data() + j, pi);
    }
    for (std::size_t j = main; j < ts.size(); ++j)
        detail::cplx_product_point(coefs, ts[j], out_re[j], out_im[j]);
}

}  // namespace spinbath::kernels::avx2

#endif  // SPINBATH_HAVE_AVX2_KERNELS
