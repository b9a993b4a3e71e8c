#include "johnson/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

namespace johnson {

namespace {

void check_engine_domain(const RunConfig& config) {
    if (config.n < 1 || config.k < 0 || 2 * config.k > config.n)
        throw std::invalid_argument("engine: need 1 <= n and 0 <= k <= n/2");
    const std::uint64_t cells = subset_count(config.n, config.k);
    if (cells > config.max_cells)
        throw std::runtime_error("engine: C(" + std::to_string(config.n) + "," +
                                 std::to_string(config.k) + ") = " + std::to_string(cells) +
                                 " vertices exceeds the configured limit of " +
                                 std::to_string(config.max_cells));
    if (config.degrees)
        for (int d : *config.degrees)
            if (d < 0 || d > config.k)
                throw std::invalid_argument("engine: degree filter outside 0..k");
}

std::vector<TopSet> canonical_tasks(const RunConfig& config) {
    std::vector<TopSet> tasks;
    for_each_top_set(config.n, config.k, [&](const Elements& b) {
        const int d = static_cast<int>(b.size());
        if (config.degrees && !config.degrees->count(d)) return;
        tasks.push_back(TopSet{b});
    });
    std::sort(tasks.begin(), tasks.end(), [](const TopSet& a, const TopSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.b < b.b;
    });
    return tasks;
}

// Runs fn(i) for i in [0,count) across the workers, exactly once per index.
// Rethrows the first worker exception.
template <class Fn>
void parallel_for(unsigned workers, std::size_t count, Fn&& fn) {
    if (count == 0) return;
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

unsigned resolve_workers(const RunConfig& config) {
    if (config.workers > 0) return config.workers;
    if (const char* env = std::getenv("JOHNSON_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void run_basis(const RunConfig& config, const std::function<void(EigenVector)>& sink) {
    check_engine_domain(config);
    const unsigned workers = resolve_workers(config);
    const std::vector<TopSet> tasks = canonical_tasks(config);
    const std::size_t total = tasks.size();
    if (total == 0) return;

    // Per-task instrumentation: every top set must be handled exactly once.
    std::vector<std::atomic<int>> handled(total);
    for (auto& h : handled) h.store(0, std::memory_order_relaxed);

    auto build = [&](std::size_t i) {
        handled[i].fetch_add(1, std::memory_order_relaxed);
        return make_eigenvector(tasks[i], config.n, config.k, config.lift_mode);
    };

    if (workers <= 1 && !config.materialize) {
        for (std::size_t i = 0; i < total; ++i) sink(build(i));
    } else if (config.materialize) {
        std::vector<std::unique_ptr<EigenVector>> results(total);
        parallel_for(workers, total, [&](std::size_t i) {
            results[i] = std::make_unique<EigenVector>(build(i));
        });
        for (auto& r : results) sink(std::move(*r));
    } else {
        // Streaming: workers fill slots, the caller drains them in order.
        // The window keeps completed-but-unemitted eigenvectors bounded.
        const std::size_t window = std::max<std::size_t>(4, 2 * workers);
        std::vector<std::unique_ptr<EigenVector>> slots(total);
        std::mutex mu;
        std::condition_variable ready_cv;   // signals the consumer
        std::condition_variable space_cv;   // signals producers
        std::size_t emitted = 0;
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;

        auto worker_body = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= total) return;
                {
                    std::unique_lock lock(mu);
                    space_cv.wait(lock, [&] { return error || i < emitted + window; });
                    if (error) return;
                }
                try {
                    auto ev = std::make_unique<EigenVector>(build(i));
                    std::lock_guard lock(mu);
                    slots[i] = std::move(ev);
                    ready_cv.notify_all();
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!error) error = std::current_exception();
                    ready_cv.notify_all();
                    space_cv.notify_all();
                    return;
                }
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_body);

        try {
            std::unique_lock lock(mu);
            while (emitted < total) {
                ready_cv.wait(lock, [&] { return error || slots[emitted] != nullptr; });
                if (error) break;
                std::unique_ptr<EigenVector> ev = std::move(slots[emitted]);
                ++emitted;
                space_cv.notify_all();
                lock.unlock();
                sink(std::move(*ev));
                ev.reset();
                lock.lock();
            }
        } catch (...) {
            {
                std::lock_guard lock(mu);
                if (!error) error = std::current_exception();
                space_cv.notify_all();
            }
            // when the sink throws, workers must unblock before unwinding
            next.store(total);
        }
        for (std::thread& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    for (std::size_t i = 0; i < total; ++i)
        if (handled[i].load(std::memory_order_relaxed) != 1)
            throw std::logic_error("engine: top set " + format_top_set(tasks[i]) +
                                   " handled " + std::to_string(handled[i].load()) +
                                   " times");
}

std::vector<EigenVector> run_basis_collect(const RunConfig& config) {
    std::vector<EigenVector> out;
    run_basis(config, [&](EigenVector ev) { out.push_back(std::move(ev)); });
    return out;
}

Decomposition run_projection(const RunConfig& config, const RatVec& f) {
    check_engine_domain(config);
    if (f.size() != subset_count(config.n, config.k))
        throw std::invalid_argument("run_projection: input dimension mismatch");
    const unsigned workers = resolve_workers(config);
    const int n = config.n;
    const int k = config.k;

    Decomposition out;
    out.n = n;
    out.k = k;
    RatVec remainder = f;
    for (int d = 0; d < k; ++d) {
        const RatVec r = transpose_lift(f, n, k, d);
        const std::vector<TopSet> tops = top_sets_of_degree(n, d);
        const std::size_t dim = r.size();

        const unsigned active =
            static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tops.size(), 1)));
        std::vector<RatVec> partial(active, RatVec(dim, Rational(0)));
        if (active <= 1) {
            accumulate_projection_terms(r, tops, n, k, partial[0]);
        } else {
            // Contiguous slices; merge order is fixed, and exact arithmetic
            // makes the merged sum independent of it anyway.
            parallel_for(active, active, [&](std::size_t w) {
                const std::size_t lo = tops.size() * w / active;
                const std::size_t hi = tops.size() * (w + 1) / active;
                accumulate_projection_terms(
                    r, std::span<const TopSet>(tops.data() + lo, hi - lo), n, k, partial[w]);
            });
        }
        RatVec& acc = partial[0];
        for (unsigned w = 1; w < active; ++w)
            for (std::size_t i = 0; i < dim; ++i) acc[i] += partial[w][i];

        RatVec fd = lift(acc, n, d, k);
        for (std::size_t i = 0; i < f.size(); ++i) remainder[i] -= fd[i];
        out.components.push_back(std::move(fd));
    }
    out.components.push_back(std::move(remainder));
    for (const RatVec& c : out.components) out.energies.push_back(rat_norm_squared(c));
    return out;
}

std::uint64_t predicted_basis_cost(int n, int k) {
    const std::uint64_t c = binomial(n, k);
    return checked_mul_u(checked_mul_u(static_cast<std::uint64_t>(k) * k, c), c);
}

std::uint64_t predicted_projection_cost(int n, int k) {
    // k^3 C(n,k) + k C(n,k-1)^2
    const std::uint64_t k3 = static_cast<std::uint64_t>(k) * k * k;
    const std::uint64_t a = checked_mul_u(k3, binomial(n, k));
    const std::uint64_t b =
        checked_mul_u(static_cast<std::uint64_t>(k),
                      checked_mul_u(binomial(n, k - 1), binomial(n, k - 1)));
    return checked_add_u(a, b);
}

std::uint64_t predicted_naive_cost(int n, int k) {
    // k C(n,k) C(n,2k) (2k-1)!!
    return checked_mul_u(checked_mul_u(static_cast<std::uint64_t>(k), binomial(n, k)),
                         count_pairs(n, k));
}

namespace {

template <class Fn>
double measure_ms(Fn&& fn, double min_sample_ms) {
    using clock = std::chrono::steady_clock;
    int reps = 0;
    const auto start = clock::now();
    double elapsed = 0.0;
    do {
        fn();
        ++reps;
        elapsed = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    } while (elapsed < min_sample_ms);
    return elapsed / reps;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<BenchRequest>& requests,
                                   double min_sample_ms) {
    std::vector<BenchRecord> records;
    for (const BenchRequest& req : requests) {
        for (unsigned w : req.workers) {
            RunConfig cfg;
            cfg.n = req.n;
            cfg.k = req.k;
            cfg.workers = w;
            const double basis_ms = measure_ms(
                [&] {
                    run_basis(cfg, [](EigenVector ev) {
                        // Consume so the work cannot be elided.
                        volatile std::int64_t sink = ev.entries.empty() ? 0 : ev.entries[0];
                        (void)sink;
                    });
                },
                min_sample_ms);
            records.push_back({req.n, req.k, "basis", w, basis_ms,
                               predicted_basis_cost(req.n, req.k)});
            if (req.include_project) {
                RatVec f(static_cast<std::size_t>(subset_count(req.n, req.k)));
                for (std::size_t i = 0; i < f.size(); ++i)
                    f[i] = Rational(static_cast<long>(i % 17) - 8);
                const double project_ms =
                    measure_ms([&] { run_projection(cfg, f); }, min_sample_ms);
                records.push_back({req.n, req.k, "project", w, project_ms,
                                   predicted_projection_cost(req.n, req.k)});
            }
        }
        if (req.include_naive) {
            const std::uint64_t cost = predicted_naive_cost(req.n, req.k);
            if (cost > kNaiveBenchBudget ||
                subset_count(req.n, req.k) > kDefaultOracleGuard) {
                records.push_back({req.n, req.k, "naive", 1, 0.0, cost,
                                   /*skipped=*/true});
            } else {
                const double naive_ms = measure_ms(
                    [&] {
                        volatile std::size_t sink = naive_basis(req.n, req.k).size();
                        (void)sink;
                    },
                    min_sample_ms);
                records.push_back({req.n, req.k, "naive", 1, naive_ms, cost});
            }
        }
    }
    return records;
}

}  // namespace johnson
