#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "johnson/checked.hpp"
#include "johnson/coefficients.hpp"
#include "johnson/subsets.hpp"
#include "johnson/topsets.hpp"

namespace johnson {

using Rational = mpq_class;
using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

/// How the multi-step lift L_{a,b} is evaluated. Staged composition of
/// single-step lifts costs sum r*C(n,r); the direct per-entry sum keeps every
/// output entry independent, which is what a per-entry parallel pass wants.
enum class LiftMode { staged, direct };

namespace detail {

inline void add_in(std::int64_t& a, std::int64_t b) { a = checked_add(a, b); }
inline void add_in(Rational& a, const Rational& b) { a += b; }
inline void div_exact_in(std::int64_t& a, std::int64_t q) { a = exact_div(a, q); }
inline void div_exact_in(Rational& a, std::int64_t q) { a /= static_cast<long>(q); }

// Ranks of all r subsets obtained by dropping one element of S (|S| = r),
// in O(r) total: the combinatorial-number-system rank of S minus element p
// splits into a prefix sum over the kept earlier elements and a suffix sum
// over the kept later ones.
class DropRanks {
  public:
    DropRanks(int n, int r)
        : n_(n), r_(r), base_(binomial(n, r - 1) - 1),
          prefix_(static_cast<std::size_t>(r) + 1),
          suffix_(static_cast<std::size_t>(r) + 2) {}

    void load(std::span<const int> S) {
        prefix_[0] = 0;
        for (int j = 1; j <= r_; ++j)
            prefix_[static_cast<std::size_t>(j)] =
                prefix_[static_cast<std::size_t>(j - 1)] +
                binom_raw(n_ - S[static_cast<std::size_t>(j - 1)], r_ - j);
        suffix_[static_cast<std::size_t>(r_) + 1] = 0;
        for (int m = r_; m >= 1; --m)
            suffix_[static_cast<std::size_t>(m)] =
                suffix_[static_cast<std::size_t>(m) + 1] +
                binom_raw(n_ - S[static_cast<std::size_t>(m - 1)], r_ - m + 1);
    }

    // Rank of S with its p-th element removed (p 1-based).
    std::uint64_t dropped(int p) const {
        return base_ - prefix_[static_cast<std::size_t>(p - 1)] -
               suffix_[static_cast<std::size_t>(p) + 1];
    }

  private:
    int n_;
    int r_;
    std::uint64_t base_;
    std::vector<std::uint64_t> prefix_;
    std::vector<std::uint64_t> suffix_;
};

}  // namespace detail

/// One up-step: out[S] = sum of v over the a+1 subsets of S of size a.
template <class T>
std::vector<T> lift_step(const std::vector<T>& v, int n, int a) {
    if (a < 0 || a >= n)
        throw std::invalid_argument("lift_step: need 0 <= a < n");
    if (v.size() != subset_count(n, a))
        throw std::invalid_argument("lift_step: input dimension mismatch");
    const int r = a + 1;
    std::vector<T> out(static_cast<std::size_t>(subset_count(n, r)));
    detail::DropRanks ranks(n, r);
    for_each_subset(n, r, [&](std::span<const int> S, std::uint64_t idx) {
        ranks.load(S);
        T& slot = out[static_cast<std::size_t>(idx)];
        for (int p = 1; p <= r; ++p)
            detail::add_in(slot, v[static_cast<std::size_t>(ranks.dropped(p))]);
    });
    return out;
}

/// One down-step of the transpose: out[T] = sum of f over supersets of T of
/// size r.
template <class T>
std::vector<T> down_step(const std::vector<T>& f, int n, int r) {
    if (r < 1 || r > n)
        throw std::invalid_argument("down_step: need 1 <= r <= n");
    if (f.size() != subset_count(n, r))
        throw std::invalid_argument("down_step: input dimension mismatch");
    std::vector<T> out(static_cast<std::size_t>(subset_count(n, r - 1)));
    detail::DropRanks ranks(n, r);
    for_each_subset(n, r, [&](std::span<const int> S, std::uint64_t idx) {
        ranks.load(S);
        const T& value = f[static_cast<std::size_t>(idx)];
        for (int p = 1; p <= r; ++p)
            detail::add_in(out[static_cast<std::size_t>(ranks.dropped(p))], value);
    });
    return out;
}

/// Direct evaluation of L_{a,b}: out[S] = sum of v over all a-subsets of S.
template <class T>
std::vector<T> lift_direct(const std::vector<T>& v, int n, int a, int b) {
    if (a < 0 || a > b || b > n)
        throw std::invalid_argument("lift: need 0 <= a <= b <= n");
    if (v.size() != subset_count(n, a))
        throw std::invalid_argument("lift: input dimension mismatch");
    std::vector<T> out(static_cast<std::size_t>(subset_count(n, b)));
    Elements sub(static_cast<std::size_t>(a));
    for_each_subset(n, b, [&](std::span<const int> S, std::uint64_t idx) {
        T& slot = out[static_cast<std::size_t>(idx)];
        // choose positions of S forming each a-subset
        Elements pos = first_subset(a);
        const std::uint64_t inner = subset_count(b, a);
        for (std::uint64_t c = 0; c < inner; ++c) {
            for (int i = 0; i < a; ++i)
                sub[static_cast<std::size_t>(i)] =
                    S[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)] - 1)];
            detail::add_in(slot, v[static_cast<std::size_t>(rank_elements(sub, n))]);
            next_subset(pos, b);
        }
    });
    return out;
}

/// L_{a,b} applied to v. Staged mode composes single steps, which counts each
/// contribution (b-a)! times, and then divides exactly; equality with the
/// direct sum follows from L_{j-1,j} L_{i,j-1} = (j-i) L_{i,j}.
template <class T>
std::vector<T> lift(const std::vector<T>& v, int n, int a, int b,
                    LiftMode mode = LiftMode::staged) {
    if (a < 0 || a > b || b > n)
        throw std::invalid_argument("lift: need 0 <= a <= b <= n");
    if (v.size() != subset_count(n, a))
        throw std::invalid_argument("lift: input dimension mismatch");
    if (mode == LiftMode::direct) return lift_direct(v, n, a, b);
    std::vector<T> cur = v;
    for (int r = a; r < b; ++r) cur = lift_step(cur, n, r);
    const std::int64_t scale = static_cast<std::int64_t>(factorial(b - a));
    if (scale != 1)
        for (T& x : cur) detail::div_exact_in(x, scale);
    return cur;
}

/// f^T L_{d,k} as a vector over d-subsets: out[T] = sum of f over k-supersets
/// of T. Computed stagewise with an exact division by (k-d)!.
template <class T>
std::vector<T> transpose_lift(const std::vector<T>& f, int n, int k, int d) {
    if (d < 0 || d > k || k > n)
        throw std::invalid_argument("transpose_lift: need 0 <= d <= k <= n");
    if (f.size() != subset_count(n, k))
        throw std::invalid_argument("transpose_lift: input dimension mismatch");
    std::vector<T> cur = f;
    for (int r = k; r > d; --r) cur = down_step(cur, n, r);
    const std::int64_t scale = static_cast<std::int64_t>(factorial(k - d));
    if (scale != 1)
        for (T& x : cur) detail::div_exact_in(x, scale);
    return cur;
}

/// One exact eigenvector of J(n,k): entries of chi_B evaluated at all k-subset
/// indicators, i.e. L_{d,k} applied to the coefficient vector of chi_B.
struct EigenVector {
    int n = 0;
    int k = 0;
    TopSet label;
    IntVec entries;

    int degree() const { return label.size(); }
    std::int64_t eigenvalue() const {
        const int d = degree();
        return static_cast<std::int64_t>(k - d) * (n - k - d) - d;
    }
    bool operator==(const EigenVector& o) const {
        return n == o.n && k == o.k && label == o.label && entries == o.entries;
    }
};

EigenVector make_eigenvector(const TopSet& B, int n, int k,
                             LiftMode mode = LiftMode::staged);

/// Eigenvalue of M_d in J(n,k): (k-d)(n-k-d) - d.
std::int64_t eigenvalue(int n, int k, int d);

}  // namespace johnson
