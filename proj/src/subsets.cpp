#include "johnson/subsets.hpp"

#include <charconv>
#include <stdexcept>

namespace johnson {

bool is_valid_subset(std::span<const int> elems, int n) {
    if (n < 0 || n > kMaxN) return false;
    int prev = 0;
    for (int e : elems) {
        if (e <= prev || e > n) return false;
        prev = e;
    }
    return true;
}

void validate_subset(std::span<const int> elems, int n) {
    if (!is_valid_subset(elems, n))
        throw std::invalid_argument("invalid subset for ambient size n=" + std::to_string(n));
}

Subset make_subset(Elements elems, int n) {
    validate_subset(elems, n);
    return Subset{std::move(elems), n};
}

std::uint64_t subset_count(int n, int m) {
    if (n < 0 || n > kMaxN || m < 0 || m > n)
        throw std::invalid_argument("subset_count: need 0 <= m <= n <= " + std::to_string(kMaxN));
    return binomial(n, m);
}

std::uint64_t rank_elements(std::span<const int> elems, int n) {
    validate_subset(elems, n);
    const int m = static_cast<int>(elems.size());
    // Lexicographic rank via the combinatorial number system:
    //   rank = C(n,m) - 1 - sum_i C(n - s_i, m - i + 1)   (i 1-based)
    std::uint64_t later = 0;
    for (int i = 0; i < m; ++i)
        later += binomial(n - elems[static_cast<std::size_t>(i)], m - i);
    return binomial(n, m) - 1 - later;
}

Elements unrank_elements(std::uint64_t index, int n, int m) {
    const std::uint64_t total = subset_count(n, m);
    if (index >= total)
        throw std::invalid_argument("unrank: index " + std::to_string(index) +
                                    " out of range [0," + std::to_string(total) + ")");
    Elements out;
    out.reserve(static_cast<std::size_t>(m));
    std::uint64_t remaining = index;
    int c = 1;
    for (int i = 1; i <= m; ++i) {
        // Smallest feasible element at position i given the remaining rank.
        while (true) {
            const std::uint64_t block = binomial(n - c, m - i);
            if (remaining < block) break;
            remaining -= block;
            ++c;
        }
        out.push_back(c);
        ++c;
    }
    return out;
}

std::uint64_t rank(const Subset& s) { return rank_elements(s.elements, s.n); }

Subset unrank(std::uint64_t index, int n, int m) {
    return Subset{unrank_elements(index, n, m), n};
}

Elements first_subset(int m) {
    if (m < 0) throw std::invalid_argument("first_subset: negative size");
    Elements s(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = i + 1;
    return s;
}

bool next_subset(Elements& s, int n) {
    const int m = static_cast<int>(s.size());
    // Rightmost position that can still be advanced.
    int i = m - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - (m - 1 - i)) --i;
    if (i < 0) {
        s = first_subset(m);
        return false;
    }
    int v = ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) s[static_cast<std::size_t>(j)] = ++v;
    return true;
}

std::vector<Subset> enumerate_subsets(int n, int m) {
    const std::uint64_t total = subset_count(n, m);
    std::vector<Subset> out;
    out.reserve(static_cast<std::size_t>(total));
    for_each_subset(n, m, [&](std::span<const int> elems, std::uint64_t) {
        out.push_back(Subset{Elements(elems.begin(), elems.end()), n});
    });
    return out;
}

std::string format_subset(std::span<const int> elems) {
    std::string out = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elems[i]);
    }
    out += '}';
    return out;
}

namespace {

Elements parse_int_list(std::string_view body, std::string_view what) {
    Elements out;
    if (body.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        const char* first = tok.data();
        const char* last = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || tok.empty())
            throw std::invalid_argument(std::string(what) + ": bad integer '" +
                                        std::string(tok) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Elements parse_subset(std::string_view text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("subset must look like {2,4}: got '" +
                                    std::string(text) + "'");
    Elements out = parse_int_list(text.substr(1, text.size() - 2), "subset");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1])
            throw std::invalid_argument("subset elements must be strictly increasing");
    return out;
}

}  // namespace johnson
