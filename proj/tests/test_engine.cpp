#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "johnson/engine.hpp"
#include "johnson/io.hpp"

using namespace johnson;

namespace {

RunConfig config(int n, int k, unsigned workers, bool materialize = false) {
    RunConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.workers = workers;
    cfg.materialize = materialize;
    return cfg;
}

std::string serialized_basis(const RunConfig& cfg) {
    std::ostringstream os;
    run_basis(cfg, [&](EigenVector ev) {
        write_basis_record(os, ev, BasisFormat::jsonl);
    });
    return os.str();
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("basis stream is in canonical order") {
    std::vector<std::string> got;
    run_basis(config(4, 2, 2), [&](EigenVector ev) {
        got.push_back(format_top_set(ev.label));
    });
    CHECK(got == std::vector<std::string>{"()", "(2)", "(3)", "(4)", "(2,4)", "(3,4)"});
}

TEST_CASE("output bytes are identical for any worker count and memory mode") {
    const std::string one = serialized_basis(config(6, 3, 1));
    CHECK(one == serialized_basis(config(6, 3, 2)));
    CHECK(one == serialized_basis(config(6, 3, 4)));
    CHECK(one == serialized_basis(config(6, 3, 3, /*materialize=*/true)));
    CHECK(!one.empty());
}

TEST_CASE("degree filter restricts the emitted eigenvectors") {
    RunConfig cfg = config(6, 3, 2);
    cfg.degrees = std::set<int>{1};
    const auto basis = run_basis_collect(cfg);
    REQUIRE(basis.size() == 5);
    for (const EigenVector& ev : basis) CHECK(ev.degree() == 1);

    cfg.degrees = std::set<int>{0, 3};
    const auto mixed = run_basis_collect(cfg);
    CHECK(mixed.size() == 1 + 5);  // C(6,0) and C(6,3)-C(6,2)
}

TEST_CASE("direct lift mode produces the same basis") {
    RunConfig direct = config(5, 2, 2);
    direct.lift_mode = LiftMode::direct;
    CHECK(run_basis_collect(direct) == run_basis_collect(config(5, 2, 2)));
}

TEST_CASE("parallel projection equals the serial decomposition") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
    RatVec f(static_cast<std::size_t>(subset_count(6, 3)));
    for (auto& x : f) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    const Decomposition serial = decompose(f, 6, 3);
    for (unsigned workers : {1u, 2u, 5u}) {
        const Decomposition par = run_projection(config(6, 3, workers), f);
        REQUIRE(par.components.size() == serial.components.size());
        for (std::size_t d = 0; d < serial.components.size(); ++d)
            CHECK(par.components[d] == serial.components[d]);
        CHECK(par.energies == serial.energies);
    }
}

TEST_CASE("worked projection example through the engine") {
    RatVec f(6, Rational(0));
    f[0] = 1;
    const Decomposition dec = run_projection(config(4, 2, 2), f);
    CHECK(dec.components[1] == RatVec{Rational(1, 2), Rational(0), Rational(0),
                                      Rational(0), Rational(0), Rational(-1, 2)});
    RatVec sum(6, Rational(0));
    for (const RatVec& c : dec.components)
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c[i];
    CHECK(sum == f);
}

TEST_CASE("resource guard names the offending size") {
    RunConfig cfg = config(24, 12, 1);
    cfg.max_cells = 1000;
    try {
        run_basis_collect(cfg);
        FAIL("expected a resource error");
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("24") != std::string::npos);
        CHECK(msg.find("12") != std::string::npos);
    }
}

TEST_CASE("a throwing sink propagates cleanly from the streaming path") {
    int seen = 0;
    CHECK_THROWS_AS(run_basis(config(6, 3, 3),
                              [&](EigenVector) {
                                  if (++seen == 2) throw std::runtime_error("stop");
                              }),
                    std::runtime_error);
    CHECK(seen == 2);
}

TEST_CASE("degree filter outside 0..k is rejected") {
    RunConfig cfg = config(6, 3, 1);
    cfg.degrees = std::set<int>{4};
    CHECK_THROWS_AS(run_basis_collect(cfg), std::invalid_argument);
}

TEST_CASE("worker resolution prefers config, then the environment") {
    RunConfig cfg = config(4, 2, 3);
    CHECK(resolve_workers(cfg) == 3);
    setenv("JOHNSON_WORKERS", "5", 1);
    cfg.workers = 0;
    CHECK(resolve_workers(cfg) == 5);
    unsetenv("JOHNSON_WORKERS");
    CHECK(resolve_workers(cfg) >= 1);
}

TEST_CASE("bench records carry positive times and the predicted trends") {
    BenchRequest req;
    req.n = 5;
    req.k = 2;
    req.workers = {1};
    req.include_naive = true;
    const auto records = run_bench({req}, /*min_sample_ms=*/5.0);
    REQUIRE(records.size() == 3);  // basis, project, naive
    for (const BenchRecord& r : records) {
        CHECK(r.wall_ms > 0.0);
        CHECK(r.n == 5);
    }
    CHECK(records[0].mode == "basis");
    CHECK(records[0].predicted_cost == 4ull * 10 * 10);
    CHECK(records[2].mode == "naive");
    CHECK(records[2].predicted_cost == predicted_naive_cost(5, 2));
    CHECK_FALSE(records[2].skipped);
}

TEST_CASE("oversized naive baselines are marked as skipped, not run") {
    BenchRequest req;
    req.n = 16;
    req.k = 8;
    req.workers = {};  // no fast-path timing, just the baseline cell
    req.include_naive = true;
    req.include_project = false;
    const auto records = run_bench({req}, 1.0);
    REQUIRE(records.size() == 1);
    CHECK(records[0].mode == "naive");
    CHECK(records[0].skipped);
    CHECK(records[0].wall_ms == 0.0);
}

}  // TEST_SUITE
