#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "johnson/lift.hpp"
#include "johnson/projection.hpp"

// Brute-force reference implementations. Everything here is deliberately
// written from the definitions (symbolic expansion, explicit adjacency,
// pairwise checks) so it can arbitrate the fast path. Exponential cost is
// fine; sizes are guarded.

namespace johnson {

/// Default ceiling on C(n,k) for materializing oracle structures.
inline constexpr std::uint64_t kDefaultOracleGuard = 20000;

/// Thrown when a requested size exceeds the oracle guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All sequences A with A_i < b_i elementwise, elements distinct and disjoint
/// from B. Order within A matters: (2,1) and (1,2) are different sequences.
std::vector<Elements> enumerate_predecessors(const TopSet& B);

/// Multilinear homogeneous polynomial: monomial variable set -> coefficient.
using Polynomial = std::map<Elements, std::int64_t>;

/// Symbolic expansion of chi_B = sum over A of prod_i (x_{A_i} - x_{B_i}).
Polynomial expand_chi(const TopSet& B);

/// Evaluate a multilinear polynomial at the 0/1 indicator of S.
std::int64_t evaluate_polynomial(const Polynomial& p, std::span<const int> S);

/// Adjacency structure of J(n,k): vertices are k-subsets in canonical order,
/// edges join subsets meeting in k-1 elements. Stored as neighbor lists
/// (the graph is k(n-k)-regular).
struct AdjacencyMatrix {
    int n = 0;
    int k = 0;
    std::uint64_t count = 0;
    int degree = 0;
    std::vector<std::uint32_t> neighbors;  // count * degree, row-major, sorted per row

    bool entry(std::uint64_t i, std::uint64_t j) const;

    template <class T>
    std::vector<T> multiply(const std::vector<T>& v) const {
        if (v.size() != count)
            throw std::invalid_argument("adjacency multiply: dimension mismatch");
        std::vector<T> out(v.size());
        for (std::uint64_t i = 0; i < count; ++i) {
            T& slot = out[static_cast<std::size_t>(i)];
            const std::uint32_t* row =
                neighbors.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(degree);
            for (int j = 0; j < degree; ++j)
                detail::add_in(slot, v[row[j]]);
        }
        return out;
    }
};

AdjacencyMatrix adjacency(int n, int k, std::uint64_t max_cells = kDefaultOracleGuard);

/// Same eigenvectors as make_eigenvector, built the slow way: evaluate every
/// chi_{A,B} factor product at every vertex indicator and sum over A.
std::vector<EigenVector> naive_basis(int n, int k,
                                     std::uint64_t max_cells = kDefaultOracleGuard);

/// C(n,2k) (2k-1)!! — the number of pairs (A,B) with A below a length-k top
/// set B; must equal the sum of count_predecessors over B of length k.
std::uint64_t count_pairs(int n, int k);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    int n = 0;
    int k = 0;
    std::vector<VerifyCheck> checks;

    bool all_pass() const;
};

/// Runs the full exact verification battery at (n,k): per-degree counts,
/// eigen-equations, pairwise orthogonality, coefficient extraction vs
/// symbolic expansion, the norm formula vs direct norms, and the pair-count
/// identity. Failures name the offending B or S in the detail field.
VerifyReport verify_basis(int n, int k, std::uint64_t max_cells = kDefaultOracleGuard);

}  // namespace johnson
