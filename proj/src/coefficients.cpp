#include "johnson/coefficients.hpp"

#include <stdexcept>

#include "johnson/checked.hpp"

namespace johnson {

std::int64_t extract_coefficient(const TopSet& B, std::span<const int> S) {
    const int d = B.size();
    if (static_cast<int>(S.size()) != d)
        throw std::invalid_argument("extract_coefficient: |S| must equal |B|");

    // i walks B, j counts the elements of S already passed, so at every
    // B-step j equals the number of S-elements below B_i.
    std::int64_t answer = 1;
    int i = 0, j = 0;
    while (i < d) {
        const int bi = B.b[static_cast<std::size_t>(i)];
        if (j < d && bi == S[static_cast<std::size_t>(j)]) {
            answer = checked_mul(answer, static_cast<std::int64_t>(i + 1 + j - bi));
            ++i;
            ++j;
        } else if (j == d || bi < S[static_cast<std::size_t>(j)]) {
            answer = checked_mul(answer, static_cast<std::int64_t>(j - (i + 1) + 1));
            ++i;
        } else {
            ++j;
        }
    }
    return answer;
}

CoeffVector coefficient_vector(const TopSet& B, int n) {
    const int d = B.size();
    if (n < 0 || n > kMaxN || (d > 0 && B.b.back() > n))
        throw std::invalid_argument("coefficient_vector: B does not fit in [n]");
    CoeffVector out;
    out.n = n;
    out.d = d;
    out.entries.resize(static_cast<std::size_t>(subset_count(n, d)));
    for_each_subset(n, d, [&](std::span<const int> S, std::uint64_t idx) {
        out.entries[static_cast<std::size_t>(idx)] = extract_coefficient(B, S);
    });
    return out;
}

}  // namespace johnson
