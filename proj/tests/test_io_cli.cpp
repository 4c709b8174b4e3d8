#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcmp/extremal.hpp"
#include "qcmp/io.hpp"
#include "qcmp/random.hpp"

using namespace qcmp;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("qcmp_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args, const fs::path& stdout_file) {
    const std::string cmd = std::string(QCMP_CLI_PATH) + " " + args + " > " +
                            stdout_file.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("fmt17 round-trips doubles") {
    std::mt19937_64 rng = seeded_engine(51);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        const double x = dist(rng);
        CHECK(std::stod(fmt17(x)) == x);
    }
}

TEST_CASE("ensemble text format round-trips exactly") {
    std::mt19937_64 rng = seeded_engine(53);
    const StateEnsemble e = haar_ensemble(4, 3, rng);
    std::ostringstream out;
    write_ensemble(out, e);
    std::istringstream in(out.str());
    const StateEnsemble back = read_ensemble(in);
    REQUIRE(back.size() == 4);
    REQUIRE(back.dim() == 3);
    for (int i = 0; i < 4; ++i) {
        CHECK((back[i].amplitudes() - e[i].amplitudes()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("ensemble parser accepts comments and reports line numbers") {
    std::istringstream good("# a comment\n2 2\n1 0 0 0\n# mid comment\n0 0 1 0\n");
    const StateEnsemble e = read_ensemble(good);
    CHECK(closeness(e) == 0.0);

    std::istringstream missing("2 2\n1 0 0 0\n");
    CHECK_THROWS_WITH_AS(read_ensemble(missing), doctest::Contains("line 3"), ParseError);

    std::istringstream garbage("2 2\n1 0 zebra 0\n0 0 1 0\n");
    CHECK_THROWS_AS(read_ensemble(garbage), ParseError);

    std::istringstream short_row("2 2\n1 0 0\n0 0 1 0\n");
    try {
        read_ensemble(short_row);
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(err.line_number == 2);
    }
}

TEST_CASE("operator blocks round-trip with labels") {
    const CompositeOperator p = symmetric_projector(2, 2);
    std::ostringstream out;
    write_operator(out, p, "Rq");
    const Mat complement = Mat::Identity(4, 4) - p.matrix();
    write_operator(out, CompositeOperator(2, 2, complement), "R2");

    std::istringstream in(out.str());
    const auto ops = read_operators(in);
    REQUIRE(ops.size() == 2);
    CHECK(ops[0].first == "Rq");
    CHECK(ops[1].first == "R2");
    CHECK((ops[0].second.matrix() - p.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((ops[1].second.matrix() - complement).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("csv reports") {
    SpanningCertificate cert;
    cert.n = 2;
    cert.d = 2;
    cert.threshold = 0.5;
    cert.epsilon = 0.5;
    cert.sigma_min = 0.25;
    cert.rank = 4;
    cert.verdict = true;
    cert.residual = 1e-12;
    const std::string csv = certificate_csv(cert, 9);
    CHECK(csv.find("# seed=9\n") == 0);
    CHECK(csv.find("n,d,A,epsilon,sigma_min,rank,verdict,residual\n") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    DecayCurve curve;
    curve.seed = 4;
    curve.samples = {{1, 3}, {2, 1}, {3, 0}};
    const std::string dcsv = decay_csv(curve);
    CHECK(std::count(dcsv.begin(), dcsv.end(), '\n') == 5); // seed + header + 3 rows
    CHECK(dcsv.find("sample_count,nullspace_dim\n") != std::string::npos);
}

TEST_CASE("atomic write replaces existing files") {
    TempDir tmp;
    const fs::path target = tmp.path / "out.txt";
    write_file_atomic(target.string(), "first\n");
    write_file_atomic(target.string(), "second\n");
    CHECK(slurp(target) == "second\n");
    CHECK_FALSE(fs::exists(tmp.path / "out.txt.tmp"));
}

TEST_CASE("cli cmin and minimal round-trip") {
    TempDir tmp;
    const fs::path out = tmp.path / "stdout.txt";
    REQUIRE(run_cli("cmin --n 3 --d 2", out) == 0);
    CHECK(slurp(out) == "0.25\n");

    const fs::path ensemble = tmp.path / "e.txt";
    REQUIRE(run_cli("minimal --n 4 --d 2 --output " + ensemble.string(), out) == 0);
    REQUIRE(run_cli("closeness --input " + ensemble.string(), out) == 0);
    const double c = std::stod(slurp(out));
    REQUIRE(run_cli("cmin --n 4 --d 2", out) == 0);
    CHECK(std::abs(c - std::stod(slurp(out))) < 1e-12);
}

TEST_CASE("cli error paths and exit codes") {
    TempDir tmp;
    const fs::path out = tmp.path / "stdout.txt";

    const fs::path bad = tmp.path / "bad.txt";
    write_file_atomic(bad.string(), "2 2\n");
    CHECK(run_cli("closeness --input " + bad.string(), out) == 1);

    CHECK(run_cli("closeness --input " + (tmp.path / "nope.txt").string(), out) == 1);

    // S2 is empty below c_min: numerical failure, exit 2.
    CHECK(run_cli("nullspace-decay --n 2 --d 2 --threshold 0 --side s2 --samples 3", out) == 2);
}

TEST_CASE("cli witness determinism") {
    TempDir tmp;
    const fs::path out = tmp.path / "stdout.txt";
    const fs::path a = tmp.path / "a.csv";
    const fs::path b = tmp.path / "b.csv";
    REQUIRE(run_cli("witness --n 2 --d 2 --threshold 0.5 --seed 1 --output " + a.string(), out) == 0);
    REQUIRE(run_cli("witness --n 2 --d 2 --threshold 0.5 --seed 1 --output " + b.string(), out) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).find(",true,") != std::string::npos);
}

TEST_CASE("cli compare and validate-povm") {
    TempDir tmp;
    const fs::path out = tmp.path / "stdout.txt";
    const fs::path report = tmp.path / "report.csv";
    REQUIRE(run_cli("compare --n 2 --d 2 --output " + report.string(), out) == 0);
    const std::string csv = slurp(report);
    CHECK(csv.find("element_label,min_eigenvalue,hermiticity_residue,completeness_residue\n") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    // Feed the built-in POVM back through validate-povm.
    const fs::path ops = tmp.path / "ops.txt";
    {
        const Povm cmp = comparison_povm(2, 2);
        std::ostringstream blocks;
        for (const PovmElement& e : cmp.elements()) write_operator(blocks, e.op, e.label);
        write_file_atomic(ops.string(), blocks.str());
    }
    CHECK(run_cli("validate-povm --input " + ops.string(), out) == 0);
    CHECK(slurp(out).find("R2,") != std::string::npos);
}
