// Geometry-module tests: closed forms against the finite-difference routes,
// curvature limits and sign structure, and the Gauss-Bonnet topology report.
#include <doctest.h>

#include <cmath>
#include <vector>

#include "spingeo/geometry.hpp"
#include "spingeo/kernels.hpp"
#include "spingeo/state.hpp"
#include "spingeo/sweep.hpp"
#include "support/oracles.hpp"

using namespace spingeo;
using geometry::MetricTensor3;
using geometry::MetricTensor3Full;

namespace {

double rel(double x, double ref, double floor_scale = 1e-3) {
    return std::abs(x - ref) / std::max(std::abs(ref), floor_scale);
}

}  // namespace

TEST_CASE("closed-form metric values") {
    const SystemConfig two_qubits(2, SpinValue(1), 1.0);
    const MetricTensor3 g =
        geometry::metric_closed_form(two_qubits, ParamPoint(0.5 * pi, 0.0, 0.0));
    CHECK(g.g_tt == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.g_pp == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.g_xx == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(std::abs(g.g_px) < 1e-15);

    // sin(Theta) = 0 kills everything but g_tt
    const MetricTensor3 pole =
        geometry::metric_closed_form(SystemConfig(3, SpinValue(2), 1.0),
                                     ParamPoint(0.0, 0.0, 1.0));
    CHECK(pole.g_pp == 0.0);
    CHECK(pole.g_xx == 0.0);
    CHECK(pole.g_px == 0.0);

    // xi = 0 reduces to the sphere of radius sqrt(N s / 2); N = 1 included
    const SystemConfig single(1, SpinValue(3), 1.0);
    const MetricTensor3 sphere =
        geometry::metric_closed_form(single, ParamPoint(1.1, 0.0, 0.0));
    CHECK(sphere.g_tt == doctest::Approx(0.75));
    CHECK(sphere.g_pp == doctest::Approx(0.75 * std::sin(1.1) * std::sin(1.1)));
    CHECK(sphere.g_xx == 0.0);
}

TEST_CASE("metric is xi- and Phi-independent") {
    const SystemConfig config(3, SpinValue(2), 1.0);
    const MetricTensor3 base =
        geometry::metric_closed_form(config, ParamPoint(1.2, 0.0, 0.0));
    for (double xi : {0.0, 0.5, 3.0})
        for (double phi : {0.0, 1.0, 4.4}) {
            const MetricTensor3 g =
                geometry::metric_closed_form(config, ParamPoint(1.2, phi, xi));
            CHECK(g.g_tt == base.g_tt);
            CHECK(g.g_pp == base.g_pp);
            CHECK(g.g_xx == base.g_xx);
            CHECK(g.g_px == base.g_px);
            // and the finite-difference route agrees point by point
            const MetricTensor3 fd =
                geometry::metric_numeric(config, ParamPoint(1.2, phi, xi));
            CHECK(rel(fd.g_xx, g.g_xx) < 1e-6);
        }
}

TEST_CASE("finite-difference metric matches the closed form") {
    const SystemConfig configs[] = {SystemConfig(2, SpinValue(1), 1.0),
                                    SystemConfig(3, SpinValue(2), 1.0),
                                    SystemConfig(4, SpinValue(1), 1.0)};
    for (const SystemConfig& config : configs)
        for (double theta : {0.3, 1.0, 0.5 * pi, 2.4})
            for (double xi : {0.0, 0.7, 3.1}) {
                const ParamPoint p(theta, 0.7, xi);
                const MetricTensor3Full fd = geometry::metric_numeric_full(config, p);
                const MetricTensor3 cf = geometry::metric_closed_form(config, p);
                CHECK(rel(fd.g_tt, cf.g_tt) < 1e-6);
                CHECK(rel(fd.g_pp, cf.g_pp) < 1e-6);
                CHECK(rel(fd.g_xx, cf.g_xx) < 1e-6);
                CHECK(rel(fd.g_px, cf.g_px) < 1e-6);
                CHECK(std::abs(fd.g_tp) < 1e-8);
                CHECK(std::abs(fd.g_tx) < 1e-8);
            }

    // the (N=3, s=1) cross component against its explicit form
    const SystemConfig c3(3, SpinValue(2), 1.0);
    const ParamPoint p(1.0, 0.0, 0.3);
    const double expected =
        -3.0 * 2.0 * 1.0 * std::cos(1.0) * std::sin(1.0) * std::sin(1.0);
    CHECK(rel(geometry::metric_numeric(c3, p).g_px, expected) < 1e-6);
    CHECK(geometry::metric_closed_form(c3, p).g_px ==
          doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("quantum geometric tensor is symmetric within stencil noise") {
    const SystemConfig config(3, SpinValue(1), 1.0);
    const double t = 1.1, p = 0.4, x = 0.9, h = 1e-5;
    auto state = [&](double theta, double phi, double xi) {
        return evolve(build_initial_state(config, theta, phi), xi).amplitudes;
    };
    const auto center = state(t, p, x);
    std::vector<std::vector<cdouble>> tangent;
    const double lo[3][3] = {{t - h, p, x}, {t, p - h, x}, {t, p, x - h}};
    const double hi[3][3] = {{t + h, p, x}, {t, p + h, x}, {t, p, x + h}};
    for (int a = 0; a < 3; ++a) {
        auto plus = state(hi[a][0], hi[a][1], hi[a][2]);
        auto minus = state(lo[a][0], lo[a][1], lo[a][2]);
        std::vector<cdouble> v(center.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = (plus[i] - minus[i]) / (2.0 * h);
        tangent.push_back(std::move(v));
    }
    auto qgt = [&](int a, int b) {
        const cdouble ab = kernels::dot_conj(tangent[a], tangent[b]);
        const cdouble a0 = kernels::dot_conj(tangent[a], center);
        const cdouble b0 = kernels::dot_conj(center, tangent[b]);
        return (ab - a0 * b0).real();
    };
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < a; ++b)
            CHECK(std::abs(qgt(a, b) - qgt(b, a)) < 1e-9);
}

TEST_CASE("metric stencil domain") {
    const SystemConfig config(2, SpinValue(1), 1.0);
    CHECK_THROWS_AS(geometry::metric_numeric(config, ParamPoint(1e-6, 0.0, 0.0)),
                    std::domain_error);
    CHECK_THROWS_AS(geometry::metric_numeric(config, ParamPoint(pi - 1e-6, 0.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("gaussian curvature closed form") {
    const SystemConfig two_qubits(2, SpinValue(1), 1.0);
    CHECK(std::abs(geometry::gaussian_curvature(two_qubits, 0.5 * pi)) < 1e-12);

    // pole limit (2/s)(2 - 3/(8 s (N-1))): equals 5 for two qubits
    CHECK(geometry::gaussian_curvature_pole_limit(two_qubits) == doctest::Approx(5.0));
    CHECK(geometry::gaussian_curvature(two_qubits, 1e-5) ==
          doctest::Approx(5.0).epsilon(1e-8));

    CHECK_THROWS_AS(geometry::gaussian_curvature(two_qubits, 0.0), std::domain_error);
    CHECK_THROWS_AS(geometry::gaussian_curvature(two_qubits, pi), std::domain_error);
    CHECK_THROWS_AS(geometry::gaussian_curvature(SystemConfig(1, SpinValue(1), 1.0), 1.0),
                    std::domain_error);

    // negative curvature exists for N > 2
    const SystemConfig c31(3, SpinValue(2), 1.0);
    double min_k = 1e9;
    for (double theta : cli::GridSpec{0.05, pi - 0.05, 101}.points())
        min_k = std::min(min_k, geometry::gaussian_curvature(c31, theta));
    CHECK(min_k < 0.0);
    CHECK(geometry::gaussian_curvature(c31, 0.5 * pi) == doctest::Approx(-4.0));
}

TEST_CASE("numeric curvature matches the closed form") {
    const SystemConfig two_qubits(2, SpinValue(1), 1.0);
    CHECK(std::abs(geometry::gaussian_curvature_numeric(two_qubits, 0.5 * pi)) < 1e-6);

    const SystemConfig c31(3, SpinValue(2), 1.0);
    CHECK(rel(geometry::gaussian_curvature_numeric(c31, 1.2),
              geometry::gaussian_curvature(c31, 1.2)) < 1e-4);

    // sign pattern across the (N=4, s=1/2) profile
    const SystemConfig c41(4, SpinValue(1), 1.0);
    for (double theta : cli::GridSpec{0.1, pi - 0.1, 25}.points()) {
        const double closed = geometry::gaussian_curvature(c41, theta);
        const double numeric = geometry::gaussian_curvature_numeric(c41, theta);
        CHECK(rel(numeric, closed) < 1e-4);
        if (std::abs(closed) > 1e-3) CHECK(closed * numeric > 0.0);
    }

    CHECK_THROWS_AS(geometry::gaussian_curvature_numeric(two_qubits, 1e-4),
                    std::domain_error);
}

TEST_CASE("gauss-bonnet topology report") {
    const SystemConfig two_qubits(2, SpinValue(1), 1.0);
    const geometry::TopologyReport report =
        geometry::euler_characteristic(two_qubits, pi, 1e-3);
    CHECK(std::abs(report.euler_characteristic - 2.0) < 1e-2);
    // defect for (N=2, s=1/2, xi_max=pi): 2 (2 pi - pi) = 2 pi
    CHECK(report.defect_sum == doctest::Approx(2.0 * pi).epsilon(1e-12));

    // bulk approaches the closed form 4 s xi_max (N-1)
    const SystemConfig c31(3, SpinValue(2), 1.0);
    const geometry::TopologyReport r31 = geometry::euler_characteristic(c31, 1.0, 1e-3);
    CHECK(rel(r31.bulk_integral, 8.0) < 1e-2);
    CHECK(geometry::gauss_bonnet_bulk_closed_form(c31, 1.0) == doctest::Approx(8.0));

    // chi is epsilon-insensitive
    for (double eps : {1e-2, 1e-3, 1e-4})
        for (const SystemConfig& config :
             {two_qubits, c31, SystemConfig(2, SpinValue(2), 1.0),
              SystemConfig(4, SpinValue(1), 1.0)}) {
            const double xi_max = config.n_spins == 2 ? pi : 1.3;
            const geometry::TopologyReport r =
                geometry::euler_characteristic(config, xi_max, eps);
            CHECK(std::abs(r.euler_characteristic - 2.0) < 1e-2);
        }

    CHECK_THROWS_AS(geometry::euler_characteristic(two_qubits, -1.0, 1e-3),
                    std::invalid_argument);
    CHECK_THROWS_AS(geometry::euler_characteristic(two_qubits, 1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(geometry::euler_characteristic(SystemConfig(1, SpinValue(1), 1.0),
                                                   1.0, 1e-3),
                    std::domain_error);
}
