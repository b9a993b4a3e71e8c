#include <doctest.h>

#include <algorithm>

#include "johnson/subsets.hpp"

using namespace johnson;

namespace {

// Independent enumeration: filter all bitmasks of [n] with popcount m, sort
// the element tuples lexicographically.
std::vector<Elements> brute_subsets(int n, int m) {
    std::vector<Elements> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        Elements e;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) e.push_back(i);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("subsets") {

TEST_CASE("enumeration order at (4,2) matches the vertex column order") {
    const std::vector<Subset> got = enumerate_subsets(4, 2);
    const std::vector<Elements> want = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i].elements == want[i]);
}

TEST_CASE("size-0 enumeration is the single empty subset") {
    for (int n : {0, 1, 5, 12}) {
        const auto got = enumerate_subsets(n, 0);
        REQUIRE(got.size() == 1);
        CHECK(got[0].elements.empty());
    }
}

TEST_CASE("enumeration equals brute-force lexicographic enumeration") {
    for (int n = 0; n <= 9; ++n) {
        for (int m = 0; m <= n; ++m) {
            const auto got = enumerate_subsets(n, m);
            const auto want = brute_subsets(n, m);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < want.size(); ++i)
                REQUIRE(got[i].elements == want[i]);
        }
    }
}

TEST_CASE("rank examples") {
    CHECK(rank_elements(Elements{1, 2}, 4) == 0);
    CHECK(rank_elements(Elements{3, 4}, 4) == 5);
    CHECK(rank_elements(Elements{2, 4}, 4) == 4);
}

TEST_CASE("unrank examples") {
    CHECK(unrank_elements(0, 4, 2) == Elements{1, 2});
    CHECK(unrank_elements(5, 4, 2) == Elements{3, 4});
    CHECK(unrank_elements(3, 4, 2) == Elements{2, 3});
}

TEST_CASE("rank and unrank are inverse bijections up to n = 12") {
    for (int n = 0; n <= 12; ++n) {
        for (int m = 0; m <= n; ++m) {
            const std::uint64_t total = subset_count(n, m);
            std::uint64_t expected = 0;
            for_each_subset(n, m, [&](std::span<const int> s, std::uint64_t idx) {
                REQUIRE(idx == expected);
                REQUIRE(rank_elements(s, n) == idx);
                REQUIRE(unrank_elements(idx, n, m) == Elements(s.begin(), s.end()));
                ++expected;
            });
            REQUIRE(expected == total);
        }
    }
}

TEST_CASE("rank is monotone in lexicographic order") {
    Elements prev;
    bool first = true;
    for_each_subset(7, 3, [&](std::span<const int> s, std::uint64_t) {
        Elements cur(s.begin(), s.end());
        if (!first) {
            CHECK(prev < cur);
            CHECK(rank_elements(prev, 7) < rank_elements(cur, 7));
        }
        prev = std::move(cur);
        first = false;
    });
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(subset_count(4, -1), std::invalid_argument);
    CHECK_THROWS_AS(subset_count(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_subsets(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(rank_elements(Elements{2, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(rank_elements(Elements{3, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(rank_elements(Elements{1, 5}, 4), std::invalid_argument);
    CHECK_THROWS_AS(unrank_elements(6, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_subset({0}, 4), std::invalid_argument);
}

TEST_CASE("textual form round-trips") {
    CHECK(format_subset(Elements{2, 4}) == "{2,4}");
    CHECK(format_subset(Elements{}) == "{}");
    CHECK(parse_subset("{2,4}") == Elements{2, 4});
    CHECK(parse_subset("{}") == Elements{});
    CHECK(parse_subset("{1,2,10}") == Elements{1, 2, 10});
    CHECK_THROWS_AS(parse_subset("{2,1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset("{a}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset("2,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset("{2,}"), std::invalid_argument);
}

TEST_CASE("binomial helpers") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(14, 7) == 3432);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(64, 32) == 1832624140942590534ull);
    CHECK_THROWS_AS(binomial(65, 1), std::invalid_argument);
    CHECK(factorial(0) == 1);
    CHECK(factorial(7) == 5040);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(3) == 3);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(6) == 48);
}

}  // TEST_SUITE
