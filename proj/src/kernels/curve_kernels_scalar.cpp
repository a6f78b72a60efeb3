#include <stdexcept>

#include "spinbath/kernels/curve_kernels.hpp"
#include "spinbath/kernels/dispatch.hpp"

namespace spinbath::kernels {

namespace scalar {

void abs2_product(std::span<const Abs2Coef> coefs, std::span<const double> ts,
                  std::span<double> out) {
    for (std::size_t j = 0; j < ts.size(); ++j)
        out[j] = detail::abs2_product_point(coefs, ts[j]);
}

void real_product(std::span<const RealCoef> coefs, std::span<const double> ts,
                  std::span<double> out) {
    for (std::size_t j = 0; j < ts.size(); ++j)
        out[j] = detail::real_product_point(coefs, ts[j]);
}

void cplx_product(std::span<const CplxCoef> coefs, std::span<const double> ts,
                  std::span<double> out_re, std::span<double> out_im) {
    for (std::size_t j = 0; j < ts.size(); ++j)
        detail::cplx_product_point(coefs, ts[j], out_re[j], out_im[j]);
}

}  // namespace scalar

namespace {

void check_sizes(std::size_t ts, std::size_t out) {
    if (ts != out)
        throw std::invalid_argument("curve kernel: output size must match time grid");
}

}  // namespace

void abs2_product(std::span<const Abs2Coef> coefs, std::span<const double> ts,
                  std::span<double> out) {
    check_sizes(ts.size(), out.size());
#if SPINBATH_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::avx2)
        return avx2::abs2_product(coefs, ts, out);
#endif
    scalar::abs2_product(coefs, ts, out);
}

void real_product(std::span<const RealCoef> coefs, std::span<const double> ts,
                  std::span<double> out) {
    check_sizes(ts.size(), out.size());
#if SPINBATH_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::avx2)
        return avx2::real_product(coefs, ts, out);
#endif
    scalar::real_product(coefs, ts, out);
}

void cplx_product(std::span<const CplxCoef> coefs, std::span<const double> ts,
                  std::span<double> out_re, std::span<double> out_im) {
    check_sizes(ts.size(), out_re.size());
    check_sizes(ts.size(), out_im.size());
#if SPINBATH_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::avx2)
        return avx2::cplx_product(coefs, ts, out_re, out_im);
#endif
    scalar::cplx_product(coefs, ts, out_re, out_im);
}

}  // namespace spinbath::kernels
