#pragma once

// Test-only reference implementations, kept independent of the library
// code paths they check: plain % arithmetic, bit-mask subset scans, full
// multiset enumeration, and cross-multiplied interval comparisons.

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline Int residue(Int x, Int n) {
    Int r = x % n;
    return r <= 0 ? r + n : r;
}

inline bool zero_sum(const std::vector<Int>& xs, Int n) {
    Int sum = 0;
    for (Int x : xs) sum += x;
    return sum % n == 0;
}

inline bool minimal_bitmask(const std::vector<Int>& xs, Int n) {
    if (!zero_sum(xs, n)) return false;
    const int k = static_cast<int>(xs.size());
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        Int sum = 0;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1u) sum += xs[static_cast<std::size_t>(i)];
        if (sum % n == 0) return false;
    }
    return true;
}

// Full scan over all 4-multisets of [1, n-1]; no derived shortcuts.
inline std::vector<std::array<Int, 4>> all_minimal_quadruples(Int n) {
    std::vector<std::array<Int, 4>> out;
    for (Int x1 = 1; x1 < n; ++x1)
        for (Int x2 = x1; x2 < n; ++x2)
            for (Int x3 = x2; x3 < n; ++x3)
                for (Int x4 = x3; x4 < n; ++x4)
                    if (minimal_bitmask({x1, x2, x3, x4}, n)) out.push_back({x1, x2, x3, x4});
    return out;
}

// Minimum coefficient sum over every unit, no early exit.
inline Int full_index(const std::vector<Int>& xs, Int n) {
    Int best = 0;
    for (Int v = 1; v < n; ++v) {
        if (std::gcd(v, n) != 1) continue;
        Int sum = 0;
        for (Int x : xs) sum += residue(v * x, n);
        Int norm = sum % n == 0 ? sum / n : sum;
        if (best == 0 || norm < best) best = norm;
    }
    return best;
}

struct IntervalScanResult {
    std::optional<Int> least_coprime;
    Int integers = 0;
    Int coprimes = 0;
};

// Integer-range scan with cross-multiplied endpoint tests; denominators
// must be positive.
inline IntervalScanResult interval_scan(Int lo_num, Int lo_den, bool lo_inc, Int hi_num,
                                        Int hi_den, bool hi_inc, Int n) {
    IntervalScanResult res;
    Int start = lo_num / lo_den - 2;
    Int stop = hi_num / hi_den + 2;
    for (Int x = start; x <= stop; ++x) {
        __int128 xl = static_cast<__int128>(x) * lo_den;
        __int128 xh = static_cast<__int128>(x) * hi_den;
        bool above = lo_inc ? xl >= lo_num : xl > lo_num;
        bool below = hi_inc ? xh <= hi_num : xh < hi_num;
        if (!above || !below) continue;
        ++res.integers;
        if (std::gcd(x < 0 ? -x : x, n) == 1) {
            ++res.coprimes;
            if (!res.least_coprime) res.least_coprime = x;
        }
    }
    return res;
}

// Cross-multiplied reference for the closed-interval certificate search:
// first (k, m) with m*c >= k*n, m*b <= k*n, gcd(m, n) = 1 and m*a < n,
// scanning k ascending and m ascending.
inline std::optional<std::pair<Int, Int>> interval_search_xmul(Int e, Int c, Int b, Int a, Int n,
                                                               Int k_max) {
    (void)e;
    for (Int k = 1; k <= k_max; ++k) {
        for (Int m = 1; m < n; ++m) {
            if (m * c < k * n) continue;
            if (m * b > k * n) break;
            if (std::gcd(m, n) != 1) continue;
            if (m * a >= n) break;
            return std::make_pair(k, m);
        }
    }
    return std::nullopt;
}

}  // namespace oracle
