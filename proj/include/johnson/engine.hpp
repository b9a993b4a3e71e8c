#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "johnson/oracle.hpp"
#include "johnson/projection.hpp"

namespace johnson {

/// Ceiling on C(n,k) for engine runs; generous compared to the oracle guard
/// since the fast path never materializes quadratic structures.
inline constexpr std::uint64_t kDefaultEngineGuard = 2'000'000;

struct RunConfig {
    int n = 0;
    int k = 0;
    unsigned workers = 0;  // 0 = JOHNSON_WORKERS env, else hardware threads
    bool materialize = false;  // stream (bounded reorder window) by default
    std::optional<std::set<int>> degrees;  // restrict to these d values
    std::uint64_t max_cells = kDefaultEngineGuard;
    LiftMode lift_mode = LiftMode::staged;
};

/// Resolved worker count: config value, else the JOHNSON_WORKERS environment
/// variable, else hardware concurrency (at least 1).
unsigned resolve_workers(const RunConfig& config);

/// Generate every eigenvector whose degree passes the filter and hand each to
/// the sink in canonical order (degree ascending, label lexicographic). Work
/// is farmed out per top set; exact arithmetic makes the emitted bytes
/// identical for any worker count. In streaming mode a bounded reorder
/// window holds only a few eigenvectors in flight at a time.
void run_basis(const RunConfig& config, const std::function<void(EigenVector)>& sink);

std::vector<EigenVector> run_basis_collect(const RunConfig& config);

/// Full eigenspace decomposition of f, with the per-top-set projection terms
/// accumulated in parallel into worker-private partial vectors merged at a
/// barrier. Output is identical for any worker count.
Decomposition run_projection(const RunConfig& config, const RatVec& f);

/// Naive-baseline measurements beyond this predicted operation count are
/// skipped (and marked) instead of run; the baseline grows almost
/// exponentially faster than the construction being compared against.
inline constexpr std::uint64_t kNaiveBenchBudget = 1'000'000'000;

struct BenchRecord {
    int n = 0;
    int k = 0;
    std::string mode;  // "basis", "project", or "naive"
    unsigned workers = 1;
    double wall_ms = 0.0;
    std::uint64_t predicted_cost = 0;
    bool skipped = false;  // cell marked rather than measured
};

struct BenchRequest {
    int n = 0;
    int k = 0;
    std::vector<unsigned> workers = {1};
    bool include_naive = false;
    bool include_project = true;
};

/// Wall-time records for the fast basis construction, the fast projection,
/// and optionally the naive per-pair baseline at matched sizes. Each
/// measurement repeats the run until enough wall time accumulates to trust
/// the average. predicted_cost carries the closed-form operation-count trend
/// for the mode (k^2 C(n,k)^2 for basis).
std::vector<BenchRecord> run_bench(const std::vector<BenchRequest>& requests,
                                   double min_sample_ms = 100.0);

std::uint64_t predicted_basis_cost(int n, int k);
std::uint64_t predicted_projection_cost(int n, int k);
std::uint64_t predicted_naive_cost(int n, int k);

}  // namespace johnson
