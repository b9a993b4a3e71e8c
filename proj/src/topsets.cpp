#include "johnson/topsets.hpp"

#include <stdexcept>

#include "johnson/checked.hpp"

namespace johnson {

bool is_top_set(std::span<const int> b, int n) {
    validate_subset(b, n);  // strictly increasing, in [1,n]
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] < 2 * static_cast<int>(i + 1)) return false;
    return true;
}

TopSet make_top_set(Elements b, int n) {
    TopSet t{std::move(b)};
    if (!is_top_set(t.b, n))
        throw std::invalid_argument("not a top set: " + format_top_set(t));
    return t;
}

std::uint64_t count_predecessors(const TopSet& B) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < B.b.size(); ++i) {
        const int factor = B.b[i] - 2 * static_cast<int>(i + 1) + 1;
        if (factor < 1)
            throw std::invalid_argument("count_predecessors: not a top set");
        count = checked_mul_u(count, static_cast<std::uint64_t>(factor));
    }
    return count;
}

std::uint64_t eigenspace_dimension(int n, int d) {
    if (n < 0 || n > kMaxN || d < 0 || 2 * d > n)
        throw std::invalid_argument("eigenspace_dimension: need 0 <= d <= n/2");
    return binomial(n, d) - binomial(n, d - 1);
}

std::vector<TopSet> enumerate_top_sets(int n, int k) {
    std::vector<TopSet> out;
    for_each_top_set(n, k, [&](const Elements& b) { out.push_back(TopSet{b}); });
    return out;
}

std::vector<TopSet> top_sets_of_degree(int n, int d) {
    if (n < 0 || d < 0 || 2 * d > n)
        throw std::invalid_argument("top_sets_of_degree: need 0 <= d <= n/2");
    std::vector<TopSet> out;
    for_each_top_set(n, d, [&](const Elements& b) {
        if (static_cast<int>(b.size()) == d) out.push_back(TopSet{b});
    });
    return out;
}

std::string format_top_set(const TopSet& B) {
    std::string out = "(";
    for (std::size_t i = 0; i < B.b.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(B.b[i]);
    }
    out += ')';
    return out;
}

TopSet parse_top_set(std::string_view text, int n) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("top set must look like (2,4): got '" +
                                    std::string(text) + "'");
    std::string inner(text.substr(1, text.size() - 2));
    Elements b;
    if (!inner.empty()) {
        // Reuse the subset element parser; the brace form shares its syntax.
        b = parse_subset("{" + inner + "}");
    }
    return make_top_set(std::move(b), n);
}

}  // namespace johnson
