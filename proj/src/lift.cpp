#include "johnson/lift.hpp"

namespace johnson {

EigenVector make_eigenvector(const TopSet& B, int n, int k, LiftMode mode) {
    const int d = B.size();
    if (d > k || 2 * k > n)
        throw std::invalid_argument("make_eigenvector: need |B| <= k <= n/2");
    CoeffVector c = coefficient_vector(B, n);
    EigenVector ev;
    ev.n = n;
    ev.k = k;
    ev.label = B;
    ev.entries = lift(c.entries, n, d, k, mode);
    return ev;
}

std::int64_t eigenvalue(int n, int k, int d) {
    if (d < 0 || d > k || k < 0 || k > n)
        throw std::invalid_argument("eigenvalue: need 0 <= d <= k <= n");
    return static_cast<std::int64_t>(k - d) * (n - k - d) - d;
}

}  // namespace johnson
