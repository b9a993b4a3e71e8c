#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "johnson/topsets.hpp"

namespace johnson {

/// Exact coefficients of chi_B over all d-subsets of [n], indexed in
/// canonical subset order.
struct CoeffVector {
    int n = 0;
    int d = 0;
    std::vector<std::int64_t> entries;
};

/// Coefficient of the monomial with variable set S in chi_B, by a two-pointer
/// scan over B and S. Requires |S| = |B|; the result is
/// (-1)^{|S∩B|} * #{A elementwise below B, disjoint from it, whose pattern
/// keeps the monomial alive}, and is 0 exactly when some scan factor is 0.
std::int64_t extract_coefficient(const TopSet& B, std::span<const int> S);

/// All C(n,d) coefficients of chi_B in canonical subset order; O(d) per entry.
CoeffVector coefficient_vector(const TopSet& B, int n);

}  // namespace johnson
