#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "johnson/subsets.hpp"

namespace johnson {

/// An increasing sequence (b_1,...,b_d) in [n] with b_i >= 2i. The bound is
/// necessary and sufficient for a disjoint elementwise-smaller sequence A to
/// exist, so each TopSet labels one basis eigenvector.
struct TopSet {
    Elements b;

    int size() const { return static_cast<int>(b.size()); }
    bool operator==(const TopSet& other) const { return b == other.b; }
};

/// True iff b_i >= 2i for all i; throws on non-increasing or out-of-range
/// input. The empty sequence is a top set.
bool is_top_set(std::span<const int> b, int n);

TopSet make_top_set(Elements b, int n);

/// Number of sequences A with A < B elementwise and disjoint from B:
/// prod_i (b_i - 2i + 1). Empty product for d = 0.
std::uint64_t count_predecessors(const TopSet& B);

/// dim M_d = C(n,d) - C(n,d-1), with C(n,-1) = 0.
std::uint64_t eigenspace_dimension(int n, int d);

/// Visit every top set of every length 0 <= d <= k exactly once, in
/// depth-first prefix order (which is lexicographic within each length).
/// Requires 0 <= k <= n/2.
template <class F>
void for_each_top_set(int n, int k, F&& f) {
    if (n < 0 || n > kMaxN || k < 0 || 2 * k > n)
        throw std::invalid_argument("top sets: need 0 <= k <= n/2, n <= " +
                                    std::to_string(kMaxN));
    Elements b;
    b.reserve(static_cast<std::size_t>(k));
    // DFS keyed by the invariant v = b_last - 2*len: appending x is legal
    // exactly when x - 2*(len+1) >= 0, so the first child is last+1 when
    // v >= 1 and last+2 when v = 0.
    auto recurse = [&](auto&& self, int v) -> void {
        assert(v == (b.empty() ? 0 : b.back()) - 2 * static_cast<int>(b.size()));
        f(std::as_const(b));
        if (static_cast<int>(b.size()) == k) return;
        int x = (b.empty() ? 0 : b.back()) + (v == 0 ? 2 : 1);
        for (; x <= n; ++x) {
            b.push_back(x);
            self(self, x - 2 * static_cast<int>(b.size()));
            b.pop_back();
        }
    };
    recurse(recurse, 0);
}

std::vector<TopSet> enumerate_top_sets(int n, int k);

/// The length-d top sets only, in lexicographic order.
std::vector<TopSet> top_sets_of_degree(int n, int d);

// Textual form: "(2,4)"; the empty top set is "()".
std::string format_top_set(const TopSet& B);
TopSet parse_top_set(std::string_view text, int n);

}  // namespace johnson
