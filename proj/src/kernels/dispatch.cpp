#include "spinbath/kernels/dispatch.hpp"

#include <cstdlib>
#include <stdexcept>

#include "spinbath/kernels/curve_kernels.hpp"

namespace spinbath::kernels {

namespace {

bool cpu_has_avx2() {
#if SPINBATH_HAVE_AVX2_KERNELS
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect() {
    if (const char* env = std::getenv("SPINBATH_KERNELS")) {
        const std::string v(env);
        if (v == "scalar")
            return Backend::scalar;
        if (v == "avx2" && cpu_has_avx2())
            return Backend::avx2;
        // "auto" or anything unusable falls through to detection
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::optional<Backend>& forced() {
    static std::optional<Backend> f;
    return f;
}

}  // namespace

Backend active_backend() {
    if (forced())
        return *forced();
    static const Backend detected = detect();
    return detected;
}

bool backend_available(Backend b) {
    return b == Backend::scalar || cpu_has_avx2();
}

void force_backend(std::optional<Backend> b) {
    if (b && !backend_available(*b))
        throw std::invalid_argument("force_backend: " + backend_name(*b) + " not available");
    forced() = b;
}

std::string backend_name(Backend b) {
    return b == Backend::scalar ? "scalar" : "avx2";
}

}  // namespace spinbath::kernels
