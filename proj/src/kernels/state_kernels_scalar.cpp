#include <cmath>
#include <stdexcept>

#include "spinbath/kernels/curve_kernels.hpp"
#include "spinbath/kernels/dispatch.hpp"
#include "spinbath/kernels/state_kernels.hpp"

namespace spinbath::kernels {

namespace scalar {

void rotate_phases(std::span<state_cplx> amps, std::span<const double> phases) {
    for (std::size_t k = 0; k < amps.size(); ++k) {
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
    const double m00r = m[0].real(), m00i = m[0].imag();
    const double m01r = m[1].real(), m01i = m[1].imag();
    const double m10r = m[2].real(), m10i = m[2].imag();
    const double m11r = m[3].real(), m11i = m[3].imag();
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t k0 = base + off;
            const std::size_t k1 = k0 + stride;
            const double a0r = amps[k0].real(), a0i = amps[k0].imag();
            const double a1r = amps[k1].real(), a1i = amps[k1].imag();
            amps[k0] = state_cplx((m00r * a0r - m00i * a0i) + (m01r * a1r - m01i * a1i),
                                  (m00r * a0i + m00i * a0r) + (m01r * a1i + m01i * a1r));
            amps[k1] = state_cplx((m10r * a0r - m10i * a0i) + (m11r * a1r - m11i * a1i),
                                  (m10r * a0i + m10i * a0r) + (m11r * a1i + m11i * a1r));
        }
    }
}

}  // namespace scalar

void rotate_phases(std::span<state_cplx> amps, std::span<const double> phases) {
    if (amps.size() != phases.size())
        throw std::invalid_argument("rotate_phases: size mismatch");
#if SPINBATH_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::avx2)
        return avx2::rotate_phases(amps, phases);
#endif
    scalar::rotate_phases(amps, phases);
}

void apply_block(std::span<state_cplx> amps, std::size_t qubit,
                 const std::array<state_cplx, 4>& m) {
    if ((std::size_t{2} << qubit) > amps.size())
        throw std::invalid_argument("apply_block: qubit outside state");
#if SPINBATH_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::avx2)
        return avx2::apply_block(amps, qubit, m);
#endif
    scalar::apply_block(amps, qubit, m);
}

}  // namespace spinbath::kernels
