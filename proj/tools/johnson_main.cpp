// Command-line front end: exact eigenbasis generation, eigenspace
// projection, verification and benchmarking for Johnson graphs J(n,k).
//
// Exit codes: 0 success, 1 runtime failure, 2 invalid arguments or malformed
// input files, 3 verification size guard exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "johnson/engine.hpp"
#include "johnson/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_nk(int n, int k) {
    if (n < 1 || n > johnson::kMaxN)
        throw UsageError("--n must be in [1," + std::to_string(johnson::kMaxN) + "]");
    if (k < 0 || k > n) throw UsageError("--k must be in [0,n]");
    if (2 * k > n)
        throw UsageError("k > n/2 is unsupported: J(n,k) and J(n,n-k) are isomorphic, "
                         "so complement each subset and rerun with k' = n-k = " +
                         std::to_string(n - k));
}

std::optional<std::set<int>> degree_filter(const std::vector<int>& ds, int k) {
    if (ds.empty()) return std::nullopt;
    std::set<int> out(ds.begin(), ds.end());
    for (int d : out)
        if (d < 0 || d > k) throw UsageError("--d values must lie in [0,k]");
    return out;
}

// Writes through `fn` to --out when given, else to stdout.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    fn(os);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

int cmd_basis(int n, int k, const std::vector<int>& ds, const std::string& out,
              const std::string& format, unsigned workers, std::uint64_t max_cells) {
    check_nk(n, k);
    johnson::RunConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.workers = workers;
    cfg.degrees = degree_filter(ds, k);
    if (max_cells) cfg.max_cells = max_cells;
    const johnson::BasisFormat fmt =
        format == "csv" ? johnson::BasisFormat::csv : johnson::BasisFormat::jsonl;
    with_output(out, [&](std::ostream& os) {
        johnson::write_basis_header(os, n, k, fmt);
        johnson::run_basis(cfg, [&](johnson::EigenVector ev) {
            johnson::write_basis_record(os, ev, fmt);
        });
    });
    return kExitOk;
}

int cmd_project(int n, int k, const std::string& input, const std::string& prefix,
                const std::vector<int>& ds, unsigned workers, std::uint64_t max_cells) {
    check_nk(n, k);
    std::ifstream is(input);
    if (!is) throw UsageError("cannot open input file " + input);
    johnson::VectorFile vf;
    try {
        vf = johnson::read_vector_file(is);
    } catch (const johnson::ParseError& e) {
        throw UsageError(input + ": " + e.what());
    }
    if (vf.n != n || vf.k != k)
        throw UsageError(input + ": file is for J(" + std::to_string(vf.n) + "," +
                         std::to_string(vf.k) + "), requested J(" + std::to_string(n) +
                         "," + std::to_string(k) + ")");

    johnson::RunConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.workers = workers;
    if (max_cells) cfg.max_cells = max_cells;
    const johnson::Decomposition dec = johnson::run_projection(cfg, vf.values);

    const auto wanted = degree_filter(ds, k);
    nlohmann::ordered_json summary;
    summary["n"] = n;
    summary["k"] = k;
    summary["input"] = input;
    summary["energies"] = nlohmann::ordered_json::array();
    for (int d = 0; d <= k; ++d) {
        summary["energies"].push_back(
            johnson::format_rational(dec.energies[static_cast<std::size_t>(d)]));
        if (wanted && !wanted->count(d)) continue;
        const std::string path = prefix + ".d" + std::to_string(d) + ".vec";
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot open output file " + path);
        johnson::write_vector_file(os, n, k, dec.components[static_cast<std::size_t>(d)]);
    }
    std::ofstream os(prefix + ".summary.json");
    if (!os) throw std::runtime_error("cannot open output file " + prefix + ".summary.json");
    os << summary.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(int n, int k, std::uint64_t max_cells, const std::string& json_out) {
    check_nk(n, k);
    const johnson::VerifyReport report =
        johnson::verify_basis(n, k, max_cells ? max_cells : johnson::kDefaultOracleGuard);
    std::cout << johnson::verify_report_text(report);
    if (!json_out.empty()) {
        std::ofstream os(json_out);
        if (!os) throw std::runtime_error("cannot open output file " + json_out);
        os << johnson::verify_report_json(report) << "\n";
    }
    return report.all_pass() ? kExitOk : kExitRuntime;
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& spec) {
    std::vector<std::pair<int, int>> out;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        const std::size_t colon = tok.find(':');
        if (colon == std::string::npos)
            throw UsageError("--sizes entries must look like n:k, got '" + tok + "'");
        try {
            const int n = std::stoi(tok.substr(0, colon));
            const int k = std::stoi(tok.substr(colon + 1));
            check_nk(n, k);
            out.emplace_back(n, k);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("bad size entry '" + tok + "'");
        }
    }
    if (out.empty()) throw UsageError("--sizes is empty");
    return out;
}

int cmd_bench(const std::string& sizes, const std::vector<unsigned>& workers,
              const std::string& baseline, const std::string& out, double min_sample_ms) {
    std::vector<johnson::BenchRequest> requests;
    for (const auto& [n, k] : parse_sizes(sizes)) {
        johnson::BenchRequest req;
        req.n = n;
        req.k = k;
        if (!workers.empty()) req.workers = workers;
        req.include_naive = baseline == "naive";
        requests.push_back(req);
    }

    // With several worker counts, log basis-output hashes so determinism is
    // visible in the bench log.
    for (const auto& req : requests) {
        if (req.workers.size() < 2) continue;
        std::uint64_t first_hash = 0;
        bool first = true;
        for (unsigned w : req.workers) {
            johnson::RunConfig cfg;
            cfg.n = req.n;
            cfg.k = req.k;
            cfg.workers = w;
            std::ostringstream os;
            johnson::run_basis(cfg, [&](johnson::EigenVector ev) {
                johnson::write_basis_record(os, ev, johnson::BasisFormat::jsonl);
            });
            const std::uint64_t h = fnv1a(os.str());
            std::cerr << "bench: basis " << req.n << ":" << req.k << " workers=" << w
                      << " output-hash=" << std::hex << h << std::dec
                      << (first || h == first_hash ? "" : "  MISMATCH") << "\n";
            if (first) {
                first_hash = h;
                first = false;
            }
        }
    }

    const std::vector<johnson::BenchRecord> records =
        johnson::run_bench(requests, min_sample_ms);
    with_output(out, [&](std::ostream& os) {
        os << "n,k,mode,workers,wall_ms,predicted_cost\n";
        for (const johnson::BenchRecord& r : records) {
            os << r.n << ',' << r.k << ',' << r.mode << ',' << r.workers << ',';
            if (r.skipped) {
                os << "skipped";
            } else {
                std::ostringstream ms;
                ms.setf(std::ios::fixed);
                ms.precision(3);
                ms << r.wall_ms;
                os << ms.str();
            }
            os << ',' << r.predicted_cost << "\n";
        }
    });

    // ratio table: measured naive/fast alongside the predicted separation
    for (const johnson::BenchRecord& naive : records) {
        if (naive.mode != "naive") continue;
        if (naive.skipped) {
            std::cerr << "bench: naive baseline at " << naive.n << ":" << naive.k
                      << " skipped (predicted cost " << naive.predicted_cost << ")\n";
            continue;
        }
        for (const johnson::BenchRecord& fast : records) {
            if (fast.mode != "basis" || fast.n != naive.n || fast.k != naive.k) continue;
            std::cerr << "bench: " << naive.n << ":" << naive.k << " naive/fast = "
                      << naive.wall_ms / fast.wall_ms << " (predicted "
                      << static_cast<double>(naive.predicted_cost) /
                             static_cast<double>(fast.predicted_cost)
                      << ", workers=" << fast.workers << ")\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact eigenbasis and eigenspace projections for Johnson graphs J(n,k)"};
    app.require_subcommand(1);

    int n = 0, k = 0;
    std::vector<int> ds;
    std::string out, format = "jsonl", input, prefix, json_out;
    std::string sizes, baseline = "none";
    std::vector<unsigned> workers_list;
    unsigned workers = 0;
    std::uint64_t max_cells = 0;
    double min_sample_ms = 100.0;

    CLI::App* basis = app.add_subcommand("basis", "Generate the orthogonal eigenbasis");
    basis->add_option("--n", n, "ambient set size")->required();
    basis->add_option("--k", k, "subset size (k <= n/2)")->required();
    basis->add_option("--d", ds, "only these degrees")->delimiter(',');
    basis->add_option("--out", out, "output path (stdout when omitted)");
    basis->add_option("--format", format, "record format")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    basis->add_option("--workers", workers, "worker threads (0 = auto)")
        ->envname("JOHNSON_WORKERS");
    basis->add_option("--max-cells", max_cells, "override the size guard");

    CLI::App* project = app.add_subcommand("project", "Project a vector onto each eigenspace");
    project->add_option("--n", n, "ambient set size")->required();
    project->add_option("--k", k, "subset size (k <= n/2)")->required();
    project->add_option("--input", input, "johnson-vector input file")->required();
    project->add_option("--out-prefix", prefix, "prefix for <prefix>.d<d>.vec files")
        ->required();
    project->add_option("--d", ds, "write only these components")->delimiter(',');
    project->add_option("--workers", workers, "worker threads (0 = auto)")
        ->envname("JOHNSON_WORKERS");
    project->add_option("--max-cells", max_cells, "override the size guard");

    CLI::App* verify = app.add_subcommand("verify", "Run the exact verification battery");
    verify->add_option("--n", n, "ambient set size")->required();
    verify->add_option("--k", k, "subset size (k <= n/2)")->required();
    verify->add_option("--max-cells", max_cells, "override the size guard");
    verify->add_option("--json", json_out, "also write a JSON report here");

    CLI::App* bench = app.add_subcommand("bench", "Time basis generation and projection");
    bench->add_option("--sizes", sizes, "comma-separated n:k pairs")->required();
    bench->add_option("--workers", workers_list, "worker counts to time")->delimiter(',');
    bench->add_option("--baseline", baseline, "also time a baseline")
        ->check(CLI::IsMember({"none", "naive"}));
    bench->add_option("--out", out, "CSV path (stdout when omitted)");
    bench->add_option("--min-sample-ms", min_sample_ms, "minimum time per measurement");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*basis) return cmd_basis(n, k, ds, out, format, workers, max_cells);
        if (*project) return cmd_project(n, k, input, prefix, ds, workers, max_cells);
        if (*verify) return cmd_verify(n, k, max_cells, json_out);
        if (*bench) return cmd_bench(sizes, workers_list, baseline, out, min_sample_ms);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const johnson::GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
