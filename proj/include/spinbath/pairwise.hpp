#pragma once

#include <cstddef>

namespace spinbath {

/// Pairwise (tree) reduction of term(lo..hi-1): fixed association independent
/// of evaluation order, so parallel producers reduce to identical bits.
template <class T, class Term>
T pairwise_sum(std::size_t lo, std::size_t hi, const Term& term) {
    const std::size_t n = hi - lo;
    if (n == 0)
        return T{};
    if (n <= 8) {
        T acc = term(lo);
        for (std::size_t k = lo + 1; k < hi; ++k)
            acc += term(k);
        return acc;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum<T>(lo, mid, term) + pairwise_sum<T>(mid, hi, term);
}

}  // namespace spinbath
