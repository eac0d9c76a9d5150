#pragma once

// Test-only reference computations, written against plain machine integers
// so they share no code path with the library.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>

namespace oracle {

/// s(q, p) for p >= 1 as a reduced fraction (num, den), from
/// ((k/p)) = (2k - p) / 2p for 0 < k < p.
inline std::pair<std::int64_t, std::int64_t> dedekind(std::int64_t q, std::int64_t p) {
    std::int64_t num = 0;
    for (std::int64_t k = 1; k < p; ++k) {
        const std::int64_t r = ((k * q) % p + p) % p;
        if (r != 0) {
            num += (2 * k - p) * (2 * r - p);
        }
    }
    std::int64_t den = 4 * p * p;
    const std::int64_t g = std::gcd(std::llabs(num), den);
    return {num / g, den / g};
}

/// Some unit u mod p with q = q2 * u^2, by trying every residue.
inline bool congruent_by_search(std::int64_t p, std::int64_t q, std::int64_t q2) {
    for (std::int64_t u = 0; u < p; ++u) {
        if (std::gcd(u, p) == 1 && (((q2 * u % p) * u - q) % p + p) % p == 0) {
            return true;
        }
    }
    return p == 1;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace oracle
