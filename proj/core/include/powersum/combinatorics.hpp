#pragma once

#include <cstdint>
#include <stdexcept>

namespace powersum {

/// n! as an exact 64-bit value. Requires 0 <= n <= 20.
inline std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: n must be in [0, 20]");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

/// Binomial coefficient C(n, k) as an exact 64-bit value. Requires
/// 0 <= k <= n <= 62 (the largest n whose full row fits in 64 bits).
inline std::int64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > 62)
        throw std::invalid_argument("binomial: need 0 <= k <= n <= 62");
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace powersum
