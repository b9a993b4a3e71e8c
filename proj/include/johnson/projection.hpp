#pragma once

#include <span>

#include "johnson/lift.hpp"
#include "johnson/rational.hpp"

namespace johnson {

/// The two candidate per-element products in the closed-form ||e_B||^2. The
/// published product (b_i-2i+2)(b_i-2i+3) does not match direct norms; the
/// index-shifted product (b_i-2i+1)(b_i-2i+2) does. calibrate_norm_variant
/// settles it against e_B . e_B and is run as a build gate.
enum class NormVariant { shifted, printed };

Rational norm_squared_variant(const TopSet& B, int n, int k, NormVariant variant);

/// Exact ||e_B||^2 = C(n,k) * prod_i (b_i-2i+1)(b_i-2i+2)
///                   * k^(falling d) (n-k)^(falling d) / n^(falling 2d).
Rational norm_squared(const TopSet& B, int n, int k);

/// Tests both product variants against e_B . e_B over every top set for all
/// 2 <= n <= max_n, k <= n/2. Returns the unique variant that matches
/// everywhere; throws std::logic_error when none or both do.
NormVariant calibrate_norm_variant(int max_n);

/// Adds sum over B in tops of ((r . c_B)/||e_B||^2) c_B into acc, streaming
/// one coefficient vector at a time. r must live over d-subsets and acc have
/// the same dimension. This is the per-degree inner loop of project(), split
/// out so workers can run it over disjoint slices of the top-set list.
void accumulate_projection_terms(const RatVec& r, std::span<const TopSet> tops,
                                 int n, int k, RatVec& acc);

/// Orthogonal projection of f onto the eigenspace M_d of J(n,k), computed as
/// lift( sum_B ((f^T L) c_B / ||e_B||^2) c_B ). Exact rational output.
RatVec project(const RatVec& f, int n, int k, int d);

/// All k+1 eigenspace components of f. components[d] is the projection onto
/// M_d; they sum to f exactly. energies[d] = ||f_d||^2.
struct Decomposition {
    int n = 0;
    int k = 0;
    std::vector<RatVec> components;
    std::vector<Rational> energies;
};

/// f_d = project(f, d) for d < k; f_k by subtracting the rest from f.
Decomposition decompose(const RatVec& f, int n, int k);

}  // namespace johnson
