#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "johnson/binomial.hpp"

namespace johnson {

// Ascending 1-based elements of a subset of [n].
using Elements = std::vector<int>;

/// A size-m subset of [n]. Elements are strictly increasing, 1-based.
struct Subset {
    Elements elements;
    int n = 0;

    int size() const { return static_cast<int>(elements.size()); }
};

bool is_valid_subset(std::span<const int> elems, int n);
void validate_subset(std::span<const int> elems, int n);

/// Validated constructor; throws std::invalid_argument on malformed input.
Subset make_subset(Elements elems, int n);

/// C(n,m) with the domain check 0 <= m <= n.
std::uint64_t subset_count(int n, int m);

// Canonical order is lexicographic on the ascending element tuple; ranks are
// assigned by the combinatorial number system so rank/unrank are O(m) with
// Pascal-table lookups.
std::uint64_t rank_elements(std::span<const int> elems, int n);
Elements unrank_elements(std::uint64_t index, int n, int m);

std::uint64_t rank(const Subset& s);
Subset unrank(std::uint64_t index, int n, int m);

/// Advance `s` to its lexicographic successor among m-subsets of [n];
/// returns false (leaving s at the first subset) when past the end.
bool next_subset(Elements& s, int n);

/// First m-subset in canonical order: {1,...,m}.
Elements first_subset(int m);

std::vector<Subset> enumerate_subsets(int n, int m);

/// Visit all m-subsets of [n] in canonical order; f(elems, index).
template <class F>
void for_each_subset(int n, int m, F&& f) {
    const std::uint64_t total = subset_count(n, m);
    Elements s = first_subset(m);
    for (std::uint64_t i = 0; i < total; ++i) {
        f(std::span<const int>(s), i);
        next_subset(s, n);
    }
}

// Textual form used by all files and the CLI: "{2,4}"; the empty set is "{}".
std::string format_subset(std::span<const int> elems);
Elements parse_subset(std::string_view text);

}  // namespace johnson
