#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace spinbath::kernels {

using state_cplx = std::complex<double>;

// Dense state-vector primitives used by the brute-force oracle. Scalar and
// AVX2 variants are bit-identical (same libm trig, no FP contraction).

/// amps[k] *= exp(i * phases[k])
void rotate_phases(std::span<state_cplx> amps, std::span<const double> phases);

/// Apply the 2x2 block m = {m00, m01, m10, m11} to `qubit` (basis bit value
/// 0 = up): for every index pair (k0, k1 = k0 | 1<<qubit) with bit clear in
/// k0, (a0, a1) <- (m00 a0 + m01 a1, m10 a0 + m11 a1).
void apply_block(std::span<state_cplx> amps, std::size_t qubit,
                 const std::array<state_cplx, 4>& m);

namespace scalar {
void rotate_phases(std::span<state_cplx>, std::span<const double>);
void apply_block(std::span<state_cplx>, std::size_t, const std::array<state_cplx, 4>&);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void rotate_phases(std::span<state_cplx>, std::span<const double>);
void apply_block(std::span<state_cplx>, std::size_t, const std::array<state_cplx, 4>&);
}  // namespace avx2
#endif

}  // namespace spinbath::kernels
