#include "johnson/oracle.hpp"

#include <algorithm>

namespace johnson {

std::vector<Elements> enumerate_predecessors(const TopSet& B) {
    const int d = B.size();
    std::vector<Elements> out;
    Elements a(static_cast<std::size_t>(d));
    std::vector<bool> used;
    if (d > 0) used.assign(static_cast<std::size_t>(B.b.back()) + 1, false);
    for (int e : B.b) used[static_cast<std::size_t>(e)] = true;

    auto recurse = [&](auto&& self, int i) -> void {
        if (i == d) {
            out.push_back(a);
            return;
        }
        for (int x = 1; x < B.b[static_cast<std::size_t>(i)]; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            used[static_cast<std::size_t>(x)] = true;
            a[static_cast<std::size_t>(i)] = x;
            self(self, i + 1);
            used[static_cast<std::size_t>(x)] = false;
        }
    };
    if (d == 0) {
        out.push_back({});
        return out;
    }
    recurse(recurse, 0);
    return out;
}

Polynomial expand_chi(const TopSet& B) {
    const int d = B.size();
    Polynomial poly;
    const std::vector<Elements> preds = enumerate_predecessors(B);
    Elements vars(static_cast<std::size_t>(d));
    for (const Elements& A : preds) {
        // Expand prod_i (x_{A_i} - x_{B_i}) over all 2^d picks.
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            int sign = 1;
            for (int i = 0; i < d; ++i) {
                if (mask & (1u << i)) {
                    vars[static_cast<std::size_t>(i)] = B.b[static_cast<std::size_t>(i)];
                    sign = -sign;
                } else {
                    vars[static_cast<std::size_t>(i)] = A[static_cast<std::size_t>(i)];
                }
            }
            Elements key = vars;
            std::sort(key.begin(), key.end());
            auto [it, inserted] = poly.try_emplace(std::move(key), sign);
            if (!inserted) {
                it->second = checked_add(it->second, sign);
                if (it->second == 0) poly.erase(it);
            }
        }
    }
    if (d == 0) poly[{}] = 1;
    return poly;
}

std::int64_t evaluate_polynomial(const Polynomial& p, std::span<const int> S) {
    std::int64_t total = 0;
    for (const auto& [vars, coef] : p) {
        bool alive = true;
        for (int v : vars)
            if (!std::binary_search(S.begin(), S.end(), v)) {
                alive = false;
                break;
            }
        if (alive) total = checked_add(total, coef);
    }
    return total;
}

bool AdjacencyMatrix::entry(std::uint64_t i, std::uint64_t j) const {
    if (i >= count || j >= count) throw std::invalid_argument("adjacency entry out of range");
    const std::uint32_t* row =
        neighbors.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(degree);
    return std::binary_search(row, row + degree, static_cast<std::uint32_t>(j));
}

AdjacencyMatrix adjacency(int n, int k, std::uint64_t max_cells) {
    if (k < 0 || k > n)
        throw std::invalid_argument("adjacency: need 0 <= k <= n");
    const std::uint64_t count = subset_count(n, k);
    if (count > max_cells)
        throw GuardExceeded("adjacency: C(" + std::to_string(n) + "," + std::to_string(k) +
                            ") = " + std::to_string(count) + " exceeds guard " +
                            std::to_string(max_cells));
    AdjacencyMatrix adj;
    adj.n = n;
    adj.k = k;
    adj.count = count;
    adj.degree = k * (n - k);
    adj.neighbors.resize(static_cast<std::size_t>(count) * static_cast<std::size_t>(adj.degree));
    // Neighbors of S are the single-swap sets (S \ {x}) + {y}.
    Elements t(static_cast<std::size_t>(k));
    for_each_subset(n, k, [&](std::span<const int> S, std::uint64_t idx) {
        std::uint32_t* row = adj.neighbors.data() +
                             static_cast<std::size_t>(idx) * static_cast<std::size_t>(adj.degree);
        int written = 0;
        for (int drop = 0; drop < k; ++drop) {
            for (int y = 1; y <= n; ++y) {
                if (std::binary_search(S.begin(), S.end(), y)) continue;
                int j = 0;
                for (int i = 0; i < k; ++i)
                    if (i != drop) t[static_cast<std::size_t>(j++)] = S[static_cast<std::size_t>(i)];
                t[static_cast<std::size_t>(k - 1)] = y;
                std::sort(t.begin(), t.end());
                row[written++] = static_cast<std::uint32_t>(rank_elements(t, n));
            }
        }
        std::sort(row, row + adj.degree);
    });
    return adj;
}

std::vector<EigenVector> naive_basis(int n, int k, std::uint64_t max_cells) {
    if (k < 0 || 2 * k > n)
        throw std::invalid_argument("naive_basis: need 0 <= k <= n/2");
    const std::uint64_t count = subset_count(n, k);
    if (count > max_cells)
        throw GuardExceeded("naive_basis: C(n,k) = " + std::to_string(count) +
                            " exceeds guard " + std::to_string(max_cells));

    std::vector<TopSet> tops = enumerate_top_sets(n, k);
    std::sort(tops.begin(), tops.end(), [](const TopSet& a, const TopSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.b < b.b;
    });

    // Dense 0/1 indicators of every vertex, so each chi_{A,B} evaluation is a
    // straight loop over its d factors.
    std::vector<std::vector<std::int8_t>> indicator(
        static_cast<std::size_t>(count), std::vector<std::int8_t>(static_cast<std::size_t>(n) + 1, 0));
    for_each_subset(n, k, [&](std::span<const int> S, std::uint64_t idx) {
        for (int e : S) indicator[static_cast<std::size_t>(idx)][static_cast<std::size_t>(e)] = 1;
    });

    std::vector<EigenVector> out;
    out.reserve(tops.size());
    for (const TopSet& B : tops) {
        const int d = B.size();
        EigenVector ev;
        ev.n = n;
        ev.k = k;
        ev.label = B;
        ev.entries.assign(static_cast<std::size_t>(count), 0);
        for (const Elements& A : enumerate_predecessors(B)) {
            for (std::uint64_t vtx = 0; vtx < count; ++vtx) {
                const std::int8_t* x = indicator[static_cast<std::size_t>(vtx)].data();
                std::int64_t term = 1;
                for (int i = 0; i < d; ++i)
                    term *= x[A[static_cast<std::size_t>(i)]] -
                            x[B.b[static_cast<std::size_t>(i)]];
                ev.entries[static_cast<std::size_t>(vtx)] =
                    checked_add(ev.entries[static_cast<std::size_t>(vtx)], term);
            }
        }
        out.push_back(std::move(ev));
    }
    return out;
}

std::uint64_t count_pairs(int n, int k) {
    if (k < 0 || 2 * k > n)
        throw std::invalid_argument("count_pairs: need 0 <= 2k <= n");
    return checked_mul_u(binomial(n, 2 * k), double_factorial(2 * k - 1));
}

bool VerifyReport::all_pass() const {
    for (const VerifyCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

VerifyReport verify_basis(int n, int k, std::uint64_t max_cells) {
    if (n < 1 || k < 0 || 2 * k > n)
        throw std::invalid_argument("verify_basis: need 1 <= n and 0 <= k <= n/2");
    const std::uint64_t count = subset_count(n, k);
    if (count > max_cells)
        throw GuardExceeded("verify_basis: C(n,k) = " + std::to_string(count) +
                            " exceeds guard " + std::to_string(max_cells));

    VerifyReport report;
    report.n = n;
    report.k = k;

    std::vector<TopSet> tops = enumerate_top_sets(n, k);
    std::vector<EigenVector> basis;
    basis.reserve(tops.size());
    for (const TopSet& B : tops) basis.push_back(make_eigenvector(B, n, k));

    // (a) per-degree counts match the dimension formula, total matches C(n,k)
    {
        std::vector<std::uint64_t> per_degree(static_cast<std::size_t>(k) + 1, 0);
        for (const EigenVector& e : basis) ++per_degree[static_cast<std::size_t>(e.degree())];
        bool ok = true;
        std::string detail;
        std::uint64_t total = 0;
        for (int d = 0; d <= k; ++d) {
            total += per_degree[static_cast<std::size_t>(d)];
            if (per_degree[static_cast<std::size_t>(d)] != eigenspace_dimension(n, d)) {
                ok = false;
                detail = "degree " + std::to_string(d) + ": got " +
                         std::to_string(per_degree[static_cast<std::size_t>(d)]) + ", want " +
                         std::to_string(eigenspace_dimension(n, d));
                break;
            }
        }
        if (ok && total != count) {
            ok = false;
            detail = "total " + std::to_string(total) + " != C(n,k) = " + std::to_string(count);
        }
        report.checks.push_back({"eigenspace dimensions", ok,
                                 ok ? std::to_string(total) + " eigenvectors" : detail});
    }

    // (b) A e_B = lambda_d e_B exactly, for every B
    {
        const AdjacencyMatrix adj = adjacency(n, k, max_cells);
        bool ok = true;
        std::string detail;
        for (const EigenVector& e : basis) {
            const IntVec ae = adj.multiply(e.entries);
            const std::int64_t lambda = e.eigenvalue();
            for (std::size_t i = 0; i < ae.size(); ++i) {
                if (ae[i] != checked_mul(lambda, e.entries[i])) {
                    ok = false;
                    detail = "B = " + format_top_set(e.label) + " at vertex index " +
                             std::to_string(i);
                    break;
                }
            }
            if (!ok) break;
        }
        report.checks.push_back({"eigen-equations", ok, detail});
    }

    // (c) pairwise orthogonality of all distinct eigenvectors
    {
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < basis.size() && ok; ++a) {
            for (std::size_t b = a + 1; b < basis.size(); ++b) {
                std::int64_t dotv = 0;
                for (std::size_t i = 0; i < basis[a].entries.size(); ++i)
                    dotv = checked_add(dotv,
                                       checked_mul(basis[a].entries[i], basis[b].entries[i]));
                if (dotv != 0) {
                    ok = false;
                    detail = format_top_set(basis[a].label) + " . " +
                             format_top_set(basis[b].label) + " = " + std::to_string(dotv);
                    break;
                }
            }
        }
        report.checks.push_back({"pairwise orthogonality", ok, detail});
    }

    // (d) scan-extracted coefficients match symbolic expansion
    {
        bool ok = true;
        std::string detail;
        for (const TopSet& B : tops) {
            const Polynomial p = expand_chi(B);
            const int d = B.size();
            for_each_subset(n, d, [&](std::span<const int> S, std::uint64_t) {
                if (!ok) return;
                const auto it = p.find(Elements(S.begin(), S.end()));
                const std::int64_t expected = (it == p.end()) ? 0 : it->second;
                if (extract_coefficient(B, S) != expected) {
                    ok = false;
                    detail = "B = " + format_top_set(B) + ", S = " + format_subset(S);
                }
            });
            if (!ok) break;
        }
        report.checks.push_back({"coefficient extraction vs expansion", ok, detail});
    }

    // (e) closed-form norms match direct norms
    {
        bool ok = true;
        std::string detail;
        for (const EigenVector& e : basis) {
            Rational direct = 0;
            for (std::int64_t x : e.entries)
                direct += Rational(static_cast<long>(x)) * static_cast<long>(x);
            if (norm_squared(e.label, n, k) != direct) {
                ok = false;
                detail = "B = " + format_top_set(e.label);
                break;
            }
        }
        report.checks.push_back({"norm formula", ok, detail});
    }

    // (f) pair-count identity at this k
    {
        std::uint64_t by_predecessors = 0;
        for (const TopSet& B : top_sets_of_degree(n, k))
            by_predecessors = checked_add_u(by_predecessors, count_predecessors(B));
        const std::uint64_t closed = count_pairs(n, k);
        const bool ok = by_predecessors == closed;
        report.checks.push_back({"pair-count identity", ok,
                                 ok ? std::to_string(closed) + " pairs"
                                    : std::to_string(by_predecessors) + " != " +
                                          std::to_string(closed)});
    }

    return report;
}

}  // namespace johnson
