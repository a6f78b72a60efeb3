#pragma once

#include <cstdint>
#include <random>

namespace spinbath {

// Reproducibility contract: all randomness flows through mt19937_64 (bit-
// specified by the C++ standard) seeded with a single 64-bit value, and
// uniform doubles are produced by the explicit conversion below —
// std::uniform_real_distribution is implementation-defined and never used.

/// k-th output of the splitmix64 stream seeded with `seed`; used to derive
/// ensemble-member sub-seeds without advancing shared state.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double unit_double(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return static_cast<std::uint64_t>(eng_()); }

    double next_unit() { return unit_double(next_u64()); }

private:
    std::mt19937_64 eng_;
};

}  // namespace spinbath
