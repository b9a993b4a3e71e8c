#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "johnson/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string cli_path() {
    const char* p = std::getenv("JOHNSON_CLI");
    REQUIRE_MESSAGE(p != nullptr, "JOHNSON_CLI must point at the CLI binary");
    return p;
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("johnson_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

CliResult run_cli(const std::string& args) {
    const fs::path out = scratch_dir() / "stdout.txt";
    const fs::path err = scratch_dir() / "stderr.txt";
    const std::string cmd =
        cli_path() + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("basis writes canonical jsonl to stdout") {
    const CliResult r = run_cli("basis --n 4 --k 2");
    REQUIRE(r.exit_code == 0);
    std::istringstream is(r.out);
    const auto basis = johnson::read_basis_file(is, 4, 2, johnson::BasisFormat::jsonl);
    REQUIRE(basis.size() == 6);
    CHECK(johnson::format_top_set(basis[0].label) == "()");
    CHECK(basis[1].entries == johnson::IntVec{0, 1, 1, -1, -1, 0});
    CHECK(basis[2].entries == johnson::IntVec{2, -1, 1, -1, 1, -2});
    CHECK(basis[3].entries == johnson::IntVec{2, 2, -2, 2, -2, -2});
}

TEST_CASE("basis respects the degree filter and csv format") {
    const CliResult r = run_cli("basis --n 4 --k 2 --d 0 --format csv");
    REQUIRE(r.exit_code == 0);
    std::istringstream is(r.out);
    const auto basis = johnson::read_basis_file(is, 4, 2, johnson::BasisFormat::csv);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].entries == johnson::IntVec(6, 1));
}

TEST_CASE("k beyond n/2 exits 2 with a complementation hint") {
    const CliResult r = run_cli("basis --n 4 --k 3");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("complement") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("missing required flags exit 2") {
    CHECK(run_cli("basis --n 4").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("verify passes at (4,2) and writes a JSON report") {
    const fs::path json = scratch_dir() / "report.json";
    const CliResult r = run_cli("verify --n 4 --k 2 --json " + json.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(slurp(json).find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("verify guard exceeded exits 3") {
    const CliResult r = run_cli("verify --n 30 --k 15");
    CHECK(r.exit_code == 3);
}

TEST_CASE("project writes component files that sum back to the input") {
    const fs::path input = scratch_dir() / "delta.vec";
    {
        std::ofstream os(input);
        johnson::RatVec f(6, johnson::Rational(0));
        f[0] = 1;
        johnson::write_vector_file(os, 4, 2, f);
    }
    const fs::path prefix = scratch_dir() / "delta";
    const CliResult r = run_cli("project --n 4 --k 2 --input " + input.string() +
                                " --out-prefix " + prefix.string());
    REQUIRE(r.exit_code == 0);

    johnson::RatVec sum(6, johnson::Rational(0));
    for (int d = 0; d <= 2; ++d) {
        std::ifstream is(prefix.string() + ".d" + std::to_string(d) + ".vec");
        REQUIRE(is.good());
        const johnson::VectorFile part = johnson::read_vector_file(is);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += part.values[i];
    }
    johnson::RatVec expected(6, johnson::Rational(0));
    expected[0] = 1;
    CHECK(sum == expected);

    const std::string summary = slurp(prefix.string() + ".summary.json");
    CHECK(summary.find("\"energies\"") != std::string::npos);
    CHECK(summary.find("1/6") != std::string::npos);
}

TEST_CASE("malformed vector files exit 2 and name the line") {
    const fs::path input = scratch_dir() / "broken.vec";
    {
        std::ofstream os(input);
        os << "johnson-vector n=4 k=2 count=6\n1\n2\nbad\n4\n5\n6\n";
    }
    const CliResult r = run_cli("project --n 4 --k 2 --input " + input.string() +
                                " --out-prefix " + (scratch_dir() / "x").string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 4") != std::string::npos);
}

TEST_CASE("dimension mismatch between file and flags exits 2") {
    const fs::path input = scratch_dir() / "wrongsize.vec";
    {
        std::ofstream os(input);
        johnson::RatVec f(5, johnson::Rational(1));
        johnson::write_vector_file(os, 5, 1, f);
    }
    const CliResult r = run_cli("project --n 4 --k 2 --input " + input.string() +
                                " --out-prefix " + (scratch_dir() / "y").string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("bench emits the CSV schema and logs determinism hashes") {
    const CliResult r =
        run_cli("bench --sizes 4:2 --workers 1,2 --min-sample-ms 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("n,k,mode,workers,wall_ms,predicted_cost\n", 0) == 0);
    CHECK(r.out.find("4,2,basis,1,") != std::string::npos);
    CHECK(r.out.find("4,2,basis,2,") != std::string::npos);
    CHECK(r.err.find("output-hash=") != std::string::npos);
    CHECK(r.err.find("MISMATCH") == std::string::npos);
}

TEST_CASE("bench with a naive baseline reports the ratio") {
    const CliResult r =
        run_cli("bench --sizes 5:2 --baseline naive --min-sample-ms 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("5,2,naive,1,") != std::string::npos);
    CHECK(r.err.find("naive/fast") != std::string::npos);
}

TEST_CASE("bad size specs exit 2") {
    CHECK(run_cli("bench --sizes 4x2").exit_code == 2);
    CHECK(run_cli("bench --sizes 4:9").exit_code == 2);
}

}  // TEST_SUITE
