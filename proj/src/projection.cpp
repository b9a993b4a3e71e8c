#include "johnson/projection.hpp"

#include <stdexcept>
#include <string>

namespace johnson {

namespace {

mpz_class falling_factorial(int a, int b) {
    mpz_class r = 1;
    for (int i = 0; i < b; ++i) r *= (a - i);
    return r;
}

void check_projection_domain(int n, int k) {
    if (n < 0 || n > kMaxN || k < 0)
        throw std::invalid_argument("projection: bad (n,k)");
    if (2 * k > n)
        throw std::invalid_argument(
            "projection: k > n/2 is unsupported; J(n,k) and J(n,n-k) are "
            "isomorphic, so complement the subsets and use k' = n-k");
}

}  // namespace

Rational norm_squared_variant(const TopSet& B, int n, int k, NormVariant variant) {
    check_projection_domain(n, k);
    const int d = B.size();
    if (d > k)
        throw std::invalid_argument("norm_squared: need |B| <= k");
    const int offset = (variant == NormVariant::shifted) ? 1 : 2;
    mpz_class prod = 1;
    for (int i = 1; i <= d; ++i) {
        const int base = B.b[static_cast<std::size_t>(i - 1)] - 2 * i + offset;
        prod *= base;
        prod *= base + 1;
    }
    mpz_class num = mpz_class(static_cast<unsigned long>(binomial(n, k))) * prod;
    num *= falling_factorial(k, d);
    num *= falling_factorial(n - k, d);
    Rational result(num, falling_factorial(n, 2 * d));
    result.canonicalize();
    return result;
}

Rational norm_squared(const TopSet& B, int n, int k) {
    return norm_squared_variant(B, n, k, NormVariant::shifted);
}

NormVariant calibrate_norm_variant(int max_n) {
    bool shifted_ok = true;
    bool printed_ok = true;
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 0; 2 * k <= n; ++k) {
            for_each_top_set(n, k, [&](const Elements& b) {
                const TopSet B{b};
                const EigenVector e = make_eigenvector(B, n, k);
                Rational direct = 0;
                for (std::int64_t x : e.entries)
                    direct += Rational(static_cast<long>(x)) * static_cast<long>(x);
                if (norm_squared_variant(B, n, k, NormVariant::shifted) != direct)
                    shifted_ok = false;
                if (norm_squared_variant(B, n, k, NormVariant::printed) != direct)
                    printed_ok = false;
            });
        }
    }
    if (shifted_ok == printed_ok)
        throw std::logic_error(
            "norm calibration failed: expected exactly one product variant to "
            "match direct eigenvector norms");
    return shifted_ok ? NormVariant::shifted : NormVariant::printed;
}

void accumulate_projection_terms(const RatVec& r, std::span<const TopSet> tops,
                                 int n, int k, RatVec& acc) {
    if (acc.size() != r.size())
        throw std::invalid_argument("accumulate_projection_terms: dimension mismatch");
    for (const TopSet& B : tops) {
        const CoeffVector c = coefficient_vector(B, n);
        if (c.entries.size() != r.size())
            throw std::invalid_argument("accumulate_projection_terms: degree mismatch");
        Rational weight = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            weight += r[i] * static_cast<long>(c.entries[i]);
        if (weight == 0) continue;
        weight /= norm_squared(B, n, k);
        for (std::size_t i = 0; i < r.size(); ++i)
            acc[i] += weight * static_cast<long>(c.entries[i]);
    }
}

RatVec project(const RatVec& f, int n, int k, int d) {
    check_projection_domain(n, k);
    if (d < 0 || d > k)
        throw std::invalid_argument("project: need 0 <= d <= k");
    if (f.size() != subset_count(n, k))
        throw std::invalid_argument("project: input dimension mismatch");
    const RatVec r = transpose_lift(f, n, k, d);
    RatVec acc(static_cast<std::size_t>(subset_count(n, d)), Rational(0));
    const std::vector<TopSet> tops = top_sets_of_degree(n, d);
    accumulate_projection_terms(r, tops, n, k, acc);
    return lift(acc, n, d, k);
}

Decomposition decompose(const RatVec& f, int n, int k) {
    check_projection_domain(n, k);
    if (f.size() != subset_count(n, k))
        throw std::invalid_argument("decompose: input dimension mismatch");
    Decomposition out;
    out.n = n;
    out.k = k;
    out.components.reserve(static_cast<std::size_t>(k) + 1);
    RatVec remainder = f;
    for (int d = 0; d < k; ++d) {
        RatVec fd = project(f, n, k, d);
        for (std::size_t i = 0; i < f.size(); ++i) remainder[i] -= fd[i];
        out.components.push_back(std::move(fd));
    }
    out.components.push_back(std::move(remainder));
    out.energies.reserve(out.components.size());
    for (const RatVec& c : out.components) out.energies.push_back(rat_norm_squared(c));
    return out;
}

}  // namespace johnson
