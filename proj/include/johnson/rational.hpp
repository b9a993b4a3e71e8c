#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace johnson {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

/// "p/q" with q > 1, plain decimal otherwise; always in lowest terms.
std::string format_rational(const Rational& q);

/// Accepts an optionally signed integer or "p/q"; canonicalizes the result.
/// Throws std::invalid_argument on anything else (including q = 0).
Rational parse_rational(std::string_view text);

Rational rat_dot(const RatVec& a, const RatVec& b);
Rational rat_norm_squared(const RatVec& v);

RatVec to_rational(const std::vector<std::int64_t>& v);

}  // namespace johnson
