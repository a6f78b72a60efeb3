#pragma once

#include <optional>
#include <string>

namespace spinbath::kernels {

enum class Backend { scalar, avx2 };

/// Backend used by the dispatched kernel entry points. Detected once from
/// CPUID; overridable via force_backend() or the SPINBATH_KERNELS
/// environment variable ("scalar" | "avx2" | "auto").
Backend active_backend();

bool backend_available(Backend b);

/// Test hook: pin the backend (nullopt restores auto-detection).
/// Throws std::invalid_argument if the requested backend is unavailable.
void force_backend(std::optional<Backend> b);

std::string backend_name(Backend b);

}  // namespace spinbath::kernels
