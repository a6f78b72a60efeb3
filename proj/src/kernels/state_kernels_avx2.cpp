#include "spinbath/kernels/curve_kernels.hpp"
#include "spinbath/kernels/state_kernels.hpp"

#if SPINBATH_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cmath>

namespace spinbath::kernels::avx2 {

namespace {

// cmul of two interleaved complex values [r0,i0,r1,i1] by broadcast factors
// (cr, ci) per pair: even lanes r*cr - i*ci, odd lanes i*cr + r*ci.
inline __m256d cmul_pairs(__m256d a, __m256d cr, __m256d ci) {
    const __m256d t1 = _mm256_mul_pd(a, cr);
    const __m256d t2 = _mm256_mul_pd(_mm256_permute_pd(a, 0x5), ci);
    return _mm256_addsub_pd(t1, t2);
}

}  // namespace

void rotate_phases(std::span<state_cplx> amps, std::span<const double> phases) {
    auto* raw = reinterpret_cast<double*>(amps.data());
    const std::size_t pairs = amps.size() / 2;
    for (std::size_t p = 0; p < pairs; ++p) {
        const double c0 = std::cos(phases[2 * p]);
        const double s0 = std::sin(phases[2 * p]);
        const double c1 = std::cos(phases[2 * p + 1]);
        const double s1 = std::sin(phases[2 * p + 1]);
        const __m256d a = _mm256_loadu_pd(raw + 4 * p);
        const __m256d cv = _mm256_set_pd(c1, c1, c0, c0);
        const __m256d sv = _mm256_set_pd(s1, s1, s0, s0);
        _mm256_storeu_pd(raw + 4 * p, cmul_pairs(a, cv, sv));
    }
    if (amps.size() % 2) {
        const std::size_t k = amps.size() - 1;
        const double c = std::cos(phases[k]);
        const double s = std::sin(phases[k]);
        const double re = amps[k].real();
        const double im = amps[k].imag();
        amps[k] = state_cplx(re * c - im * s, re * s + im * c);
    }
}

void apply_block(std::span<state_cplx> amps, std::size_t qubit,
                 const std::array<state_cplx, 4>& m) {
    const std::size_t stride = std::size_t{1} << qubit;
    if (stride < 2)  // pair members interleave within a register; use reference path
        return scalar::apply_block(amps, qubit, m);

    auto* raw = reinterpret_cast<double*>(amps.data());
    const __m256d m00r = _mm256_set1_pd(m[0].real()), m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real()), m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real()), m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real()), m11i = _mm256_set1_pd(m[3].imag());
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; off += 2) {
            double* p0 = raw + 2 * (base + off);
            double* p1 = raw + 2 * (base + off + stride);
            const __m256d a0 = _mm256_loadu_pd(p0);
            const __m256d a1 = _mm256_loadu_pd(p1);
            const __m256d r0 =
                _mm256_add_pd(cmul_pairs(a0, m00r, m00i), cmul_pairs(a1, m01r, m01i));
            const __m256d r1 =
                _mm256_add_pd(cmul_pairs(a0, m10r, m10i), cmul_pairs(a1, m11r, m11i));
            _mm256_storeu_pd(p0, r0);
            _mm256_storeu_pd(p1, r1);
        }
    }
}

}  // namespace spinbath::kernels::avx2

#endif  // SPINBATH_HAVE_AVX2_KERNELS
