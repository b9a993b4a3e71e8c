#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace johnson {

// All integer arithmetic on coefficient and eigenvector entries goes through
// these helpers. Overflow is a hard error, never wraparound: results are
// either exact or the computation aborts with std::overflow_error.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline std::uint64_t checked_add_u(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("unsigned overflow in addition");
    return r;
}

inline std::uint64_t checked_mul_u(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("unsigned overflow in multiplication");
    return r;
}

// Division that must leave no remainder; a non-exact quotient means an
// internal invariant was violated.
inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("exact division failed: " + std::to_string(a) +
                               " / " + std::to_string(b));
    return a / b;
}

}  // namespace johnson
