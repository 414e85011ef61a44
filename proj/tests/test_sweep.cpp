// Sweep/validate machinery: grid semantics, singular-row marking, determinism,
// figure presets, named-field spec errors, and the mutation fixture.
#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "spingeo/phases.hpp"
#include "spingeo/sweep.hpp"
#include "spingeo/validate.hpp"

using namespace spingeo;
using namespace spingeo::cli;

TEST_CASE("grid semantics") {
    CHECK(GridSpec{0.0, 1.0, 5}.points() ==
          std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    CHECK(GridSpec{0.7, 0.7, 1}.points() == std::vector<double>{0.7});
}

TEST_CASE("single-point sweep emits exactly one row") {
    SweepSpec spec;
    spec.quantity = Quantity::metric;
    const SweepResult r = run_sweep(spec);
    CHECK(r.rows.size() == 1);
    CHECK(r.header.size() == r.rows[0].values.size());
}

TEST_CASE("row count equals the grid product") {
    SweepSpec spec;
    spec.quantity = Quantity::phase;
    spec.theta = {0.3, 2.8, 4};
    spec.phi = {0.0, 1.0, 2};
    spec.xi = {0.1, 2.0, 3};
    const SweepResult r = run_sweep(spec);
    CHECK(r.rows.size() == 4 * 2 * 3);
    for (const SweepRow& row : r.rows) CHECK(!row.singular);
}

TEST_CASE("singular points are marked, never silent") {
    SweepSpec spec;
    spec.quantity = Quantity::curvature;
    spec.theta = {0.0, pi, 5};
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.rows.size() == 5);
    CHECK(r.rows.front().singular);
    CHECK(r.rows.back().singular);
    CHECK(std::isnan(r.rows.front().values[1]));
    for (std::size_t i = 1; i + 1 < r.rows.size(); ++i) {
        CHECK(!r.rows[i].singular);
        CHECK(std::isfinite(r.rows[i].values[1]));
    }
    const std::string csv = render_csv(r);
    CHECK(csv.find("singular") != std::string::npos);
    const std::string json_text = render_json(r);
    CHECK(json_text.find("\"status\": \"singular\"") != std::string::npos);
    CHECK(json_text.find("null") != std::string::npos);
}

TEST_CASE("renders are deterministic and JSON parses") {
    SweepSpec spec;
    spec.quantity = Quantity::fig1;
    const std::string a = render_csv(run_sweep(spec));
    const std::string b = render_csv(run_sweep(spec));
    CHECK(a == b);
    const std::string j1 = render_json(run_sweep(spec));
    const std::string j2 = render_json(run_sweep(spec));
    CHECK(j1 == j2);

    const nlohmann::json parsed = nlohmann::json::parse(j1);
    CHECK(parsed.contains("metadata"));
    CHECK(parsed.at("rows").size() == 4 * 101);
    CHECK(parsed.at("metadata").at("quantity") == "fig1");
}

TEST_CASE("fig1 preset endpoints") {
    SweepSpec spec;
    spec.quantity = Quantity::fig1;
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.rows.size() == 4 * 101);
    // s = 1/2 block: K runs from 5 down to 0
    CHECK(r.rows.front().values[3] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(std::abs(r.rows[100].values[3]) < 1e-12);
    // each block is monotone decreasing in C
    for (int block = 0; block < 4; ++block)
        for (int i = 0; i + 1 < 101; ++i)
            CHECK(r.rows[block * 101 + i + 1].values[3] <
                  r.rows[block * 101 + i].values[3]);
}

TEST_CASE("fig5 preset endpoints") {
    SweepSpec spec;
    spec.quantity = Quantity::fig5;
    const SweepResult r = run_sweep(spec);
    // tau(C = 0) = 0 for every spin block; tau <= t = xi'_max throughout
    for (int block = 0; block < 4; ++block) {
        CHECK(r.rows[block * 101].values[3] == 0.0);
        for (int i = 0; i < 101; ++i)
            CHECK(r.rows[block * 101 + i].values[3] <= spec.xi_prime_max * (1 + 1e-12));
    }
    // s = 1/2 block: tau(C_max) = t exactly (C' = C_max there)
    CHECK(r.rows[100].values[3] == doctest::Approx(spec.xi_prime_max).epsilon(1e-12));
}

TEST_CASE("phase unwrapping is continuous in xi and branch-equivalent") {
    const std::vector<double> flat_seq =
        spingeo::phases::unwrap_nearest_branch({0.1, 3.0, -3.0, -2.8});
    const double expected_seq[] = {0.1, 3.0, 2.0 * pi - 3.0, 2.0 * pi - 2.8};
    REQUIRE(flat_seq.size() == 4);
    for (int i = 0; i < 4; ++i)
        CHECK(flat_seq[i] == doctest::Approx(expected_seq[i]).epsilon(1e-15));

    SweepSpec spec;
    spec.quantity = Quantity::phase;
    spec.theta = {0.2, 0.2, 1};
    spec.xi = {0.0, 20.0, 81};
    const SweepResult wrapped = run_sweep(spec);
    spec.unwrap = true;
    const SweepResult flat = run_sweep(spec);

    bool wrapped_jumps = false;
    for (std::size_t i = 0; i + 1 < flat.rows.size(); ++i) {
        const double step = flat.rows[i + 1].values[3] - flat.rows[i].values[3];
        CHECK(std::abs(step) < pi);  // continuous branches
        wrapped_jumps =
            wrapped_jumps || std::abs(wrapped.rows[i + 1].values[3] -
                                      wrapped.rows[i].values[3]) > pi;
    }
    CHECK(wrapped_jumps);  // the grid genuinely crosses branch cuts
    for (std::size_t i = 0; i < flat.rows.size(); ++i)
        CHECK(std::abs(reduce_angle(flat.rows[i].values[3] -
                                    wrapped.rows[i].values[3])) < 1e-12);
}

TEST_CASE("aa_phase sweep flags genuinely cyclic horizons") {
    SweepSpec spec;
    spec.quantity = Quantity::aa_phase;
    spec.theta = {0.5, 0.5, 1};
    spec.xi = {pi, 2.0 * pi, 2};  // half a ray period, then a full one
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].values[3] == 0.0);
    CHECK(r.rows[1].values[3] == 1.0);
    CHECK(r.rows[1].values[2] ==
          doctest::Approx(spingeo::phases::aa_phase(spec.config, 0.5, 2.0 * pi)));
}

TEST_CASE("euler sweep") {
    SweepSpec spec;
    spec.quantity = Quantity::euler;
    spec.xi = {pi, pi, 1};
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.rows.size() == 1);
    CHECK(std::abs(r.rows[0].values[4] - 2.0) < 1e-2);
}

TEST_CASE("spec validation names the offending field") {
    SweepSpec spec;
    spec.quantity = Quantity::metric;
    spec.theta = {2.0, 1.0, 4};  // start > stop
    try {
        run_sweep(spec);
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(e.field == "theta");
    }

    SweepSpec euler_bad;
    euler_bad.quantity = Quantity::euler;
    euler_bad.xi = {0.0, 0.0, 1};
    try {
        run_sweep(euler_bad);
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(e.field == "xi");
    }

    SweepSpec lonely;
    lonely.quantity = Quantity::speed;
    lonely.config = SystemConfig(1, SpinValue(1), 1.0);
    try {
        run_sweep(lonely);
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(e.field == "config.n_spins");
    }

    CHECK_THROWS_AS(quantity_from_name("bogus"), SpecError);
    CHECK(quantity_from_name("aa_phase") == Quantity::aa_phase);
}

TEST_CASE("validation battery passes and the mutation fixture trips it") {
    const ValidationReport fresh = run_validation();
    CHECK(fresh.all_pass());
    for (const CheckResult& c : fresh.checks)
        if (c.name == "metric-oracle") CHECK(c.worst_error < 1e-6);

    const std::string render_a = render_report(fresh);
    const std::string render_b = render_report(run_validation());
    CHECK(render_a == render_b);

    ValidationOptions mutated;
    mutated.mutate = "curvature";
    const ValidationReport broken = run_validation(mutated);
    CHECK(!broken.all_pass());
    bool curvature_failed = false;
    for (const CheckResult& c : broken.checks) {
        if (c.name == "curvature-oracle") curvature_failed = !c.pass;
        else CHECK(c.pass);
    }
    CHECK(curvature_failed);
    CHECK(render_report(broken).find("[FAIL] curvature-oracle") != std::string::npos);

    ValidationOptions unknown;
    unknown.mutate = "bogus";
    CHECK_THROWS_AS(run_validation(unknown), SpecError);
}
