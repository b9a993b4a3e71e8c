#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "johnson/checked.hpp"

namespace johnson {

// Largest supported ambient set size. Every C(n,m) with n <= kMaxN fits in
// 64 bits (the peak is C(64,32) ~ 1.8e18), so the whole Pascal triangle is
// exact.
inline constexpr int kMaxN = 64;

namespace detail {

struct PascalTable {
    std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1> c{};
    constexpr PascalTable() {
        for (int n = 0; n <= kMaxN; ++n) {
            c[n][0] = 1;
            for (int m = 1; m <= n; ++m)
                c[n][m] = c[n - 1][m - 1] + (m <= n - 1 ? c[n - 1][m] : 0);
        }
    }
};

inline constexpr PascalTable kPascal{};

// Unchecked table read for hot loops; needs 0 <= n <= kMaxN and
// 0 <= m <= kMaxN (entries with m > n are zero).
inline std::uint64_t binom_raw(int n, int m) {
    return kPascal.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

}  // namespace detail

// C(n,m); zero outside 0 <= m <= n (so C(n,-1) = 0 as used by the
// eigenspace-dimension formula).
inline std::uint64_t binomial(int n, int m) {
    if (n < 0 || n > kMaxN)
        throw std::invalid_argument("binomial: n out of supported range [0," +
                                    std::to_string(kMaxN) + "]");
    if (m < 0 || m > n) return 0;
    return detail::kPascal.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

inline std::int64_t binomial_i(int n, int m) {
    return static_cast<std::int64_t>(binomial(n, m));
}

// n! as a checked 64-bit value (exact up to 20!).
inline std::uint64_t factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul_u(r, static_cast<std::uint64_t>(i));
    return r;
}

// x!! = x(x-2)(x-4)... down to 1 or 2; empty product for x <= 0.
inline std::uint64_t double_factorial(int x) {
    std::uint64_t r = 1;
    for (int i = x; i >= 1; i -= 2) r = checked_mul_u(r, static_cast<std::uint64_t>(i));
    return r;
}

}  // namespace johnson
