// End-to-end CLI checks through a real subprocess: exit codes (0 ok, 1 check
// failure, 2 usage error), byte-identical reruns, and the output files.
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

#ifndef SPINGEO_CLI_PATH
#error "SPINGEO_CLI_PATH must point at the CLI binary"
#endif

int run(const std::string& args) {
    const std::string cmd = std::string(SPINGEO_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const char* name)
        : path(std::string("spingeo_test_") + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli: fig preset writes deterministic csv") {
    TempFile a("fig1_a.csv"), b("fig1_b.csv");
    CHECK(run("fig1 --out " + a.path) == 0);
    CHECK(run("fig1 --out " + b.path) == 0);
    const std::string text = slurp(a.path);
    CHECK(text == slurp(b.path));
    CHECK(text.find("# quantity: fig1") != std::string::npos);
    CHECK(text.find("twice_spin,c,c_over_cmax,k,status") != std::string::npos);
    // first data row: s = 1/2 at C = 0 has K = 5
    const std::size_t header_at = text.find("twice_spin,c,");
    const std::size_t row_at = text.find('\n', header_at) + 1;
    CHECK(text.substr(row_at, 40).find(",5,") != std::string::npos);
}

TEST_CASE("cli: json output parses and mirrors the csv rows") {
    TempFile j("brach.json");
    CHECK(run("brachistochrone --n 3 --twice-spin 2 --xi 1 --format json --out " +
              j.path) == 0);
    const nlohmann::json doc = nlohmann::json::parse(slurp(j.path));
    REQUIRE(doc.at("rows").size() == 1);
    const auto& row = doc.at("rows").at(0);
    CHECK(row.at("ratio").get<double>() ==
          doctest::Approx(std::sqrt(7.0) / 4.0).epsilon(1e-14));
    CHECK(row.at("status").get<std::string>() == "ok");
}

TEST_CASE("cli: euler subcommand reports chi = 2") {
    TempFile f("euler.csv");
    CHECK(run("euler --n 2 --twice-spin 1 --xi 3.141592653589793 --out " + f.path) == 0);
    const std::string text = slurp(f.path);
    const std::size_t header_at = text.find("xi_max,epsilon,bulk,defect,chi");
    REQUIRE(header_at != std::string::npos);
    const std::size_t row_at = text.find('\n', header_at) + 1;
    std::istringstream row(text.substr(row_at));
    std::string cell;
    for (int i = 0; i < 5; ++i) std::getline(row, cell, ',');
    CHECK(std::abs(std::stod(cell) - 2.0) < 1e-2);
}

TEST_CASE("cli: unwrapped phase sweep stays continuous") {
    TempFile f("phase_unwrap.csv");
    CHECK(run("sweep --quantity phase --n 2 --twice-spin 1 --theta 0.2 "
              "--xi 0:15:31 --unwrap --out " +
              f.path) == 0);
    const std::string text = slurp(f.path);
    CHECK(text.find("# unwrap: 1") != std::string::npos);
    // global column (4th) descends monotonically well past -2 pi
    std::istringstream lines(text.substr(text.find("theta,phi,xi,")));
    std::string line;
    std::getline(lines, line);  // header
    double prev = 1.0, last = 1.0;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string cell;
        for (int i = 0; i < 4; ++i) std::getline(cells, cell, ',');
        last = std::stod(cell);
        CHECK(last <= prev);
        prev = last;
    }
    CHECK(last < -2.0 * 3.14159265358979);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run("sweep --quantity bogus --out /dev/null 2>/dev/null") == 2);
    CHECK(run("sweep 2>/dev/null") == 2);                       // missing --quantity
    CHECK(run("speedy 2>/dev/null") == 2);                      // unknown subcommand
    CHECK(run("euler --n 1 2>/dev/null") == 2);                 // SpecError n_spins
    CHECK(run("sweep --quantity metric --theta 2:1:4 2>/dev/null") == 2);
    CHECK(run("sweep --quantity metric --theta nonsense 2>/dev/null") == 2);
}

TEST_CASE("cli: version and help exit 0") {
    CHECK(run("--version > /dev/null") == 0);
    CHECK(run("--help > /dev/null") == 0);
}

TEST_CASE("cli: validate passes fresh and fails under mutation") {
    TempFile log("validate.log");
    CHECK(run("validate > " + log.path) == 0);
    const std::string text = slurp(log.path);
    CHECK(text.find("all checks passed") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);

    TempFile broken("validate_mutated.log");
    CHECK(run("validate --mutate curvature > " + broken.path) == 1);
    const std::string broken_text = slurp(broken.path);
    CHECK(broken_text.find("[FAIL] curvature-oracle") != std::string::npos);

    CHECK(run("validate --mutate bogus 2>/dev/null") == 2);
}
