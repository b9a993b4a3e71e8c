#include <doctest.h>

#include "johnson/coefficients.hpp"
#include "johnson/oracle.hpp"

using namespace johnson;

namespace {

std::int64_t expansion_coefficient(const Polynomial& p, const Elements& S) {
    const auto it = p.find(S);
    return it == p.end() ? 0 : it->second;
}

}  // namespace

TEST_SUITE("coefficients") {

TEST_CASE("single-coefficient examples") {
    CHECK(extract_coefficient(make_top_set({3}, 4), Elements{3}) == -2);
    CHECK(extract_coefficient(make_top_set({3}, 4), Elements{1}) == 1);
    CHECK(extract_coefficient(make_top_set({3, 4}, 4), Elements{1, 2}) == 2);
    CHECK(extract_coefficient(make_top_set({2, 4}, 4), Elements{2, 3}) == -1);
    CHECK(extract_coefficient(make_top_set({}, 4), Elements{}) == 1);
}

TEST_CASE("coefficient vector examples") {
    CHECK(coefficient_vector(make_top_set({2}, 4), 4).entries ==
          IntVec{1, -1, 0, 0});
    CHECK(coefficient_vector(make_top_set({4}, 4), 4).entries ==
          IntVec{1, 1, 1, -3});
    CHECK(coefficient_vector(make_top_set({}, 4), 4).entries == IntVec{1});
    CHECK(coefficient_vector(make_top_set({}, 9), 9).entries == IntVec{1});
}

TEST_CASE("scan output equals symbolic expansion for every (B,S) up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
        for_each_top_set(n, n / 2, [&](const Elements& b) {
            const TopSet B{b};
            const Polynomial p = expand_chi(B);
            for_each_subset(n, B.size(), [&](std::span<const int> S, std::uint64_t) {
                CAPTURE(n);
                CAPTURE(format_top_set(B));
                CAPTURE(format_subset(S));
                REQUIRE(extract_coefficient(B, S) ==
                        expansion_coefficient(p, Elements(S.begin(), S.end())));
            });
        });
    }
}

TEST_CASE("sign is 0 or (-1)^{|S ∩ B|}") {
    for (int n = 2; n <= 8; ++n) {
        for_each_top_set(n, n / 2, [&](const Elements& b) {
            const TopSet B{b};
            for_each_subset(n, B.size(), [&](std::span<const int> S, std::uint64_t) {
                const std::int64_t c = extract_coefficient(B, S);
                if (c == 0) return;
                int overlap = 0;
                for (int e : S)
                    if (std::binary_search(b.begin(), b.end(), e)) ++overlap;
                REQUIRE((overlap % 2 == 0 ? c > 0 : c < 0));
            });
        });
    }
}

TEST_CASE("coefficient at S = B is (-1)^d times the predecessor count") {
    for (int n = 2; n <= 8; ++n) {
        for_each_top_set(n, n / 2, [&](const Elements& b) {
            const TopSet B{b};
            const std::int64_t sign = (B.size() % 2 == 0) ? 1 : -1;
            REQUIRE(extract_coefficient(B, b) ==
                    sign * static_cast<std::int64_t>(count_predecessors(B)));
        });
    }
}

TEST_CASE("coefficient vanishes when S has an element beyond max(B)") {
    for (int n = 2; n <= 8; ++n) {
        for_each_top_set(n, n / 2, [&](const Elements& b) {
            const TopSet B{b};
            if (B.size() == 0) return;
            for_each_subset(n, B.size(), [&](std::span<const int> S, std::uint64_t) {
                if (S.back() > b.back())
                    REQUIRE(extract_coefficient(B, S) == 0);
            });
        });
    }
}

TEST_CASE("size mismatch is rejected") {
    CHECK_THROWS_AS(extract_coefficient(make_top_set({3}, 4), Elements{1, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(extract_coefficient(make_top_set({}, 4), Elements{1}),
                    std::invalid_argument);
}

}  // TEST_SUITE
