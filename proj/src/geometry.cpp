#include "spingeo/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spingeo/kernels.hpp"
#include "spingeo/quadrature.hpp"
#include "spingeo/state.hpp"

namespace spingeo::geometry {

namespace {

void require_interacting(const SystemConfig& config, const char* who) {
    if (config.n_spins < 2)
        throw std::domain_error(std::string(who) +
                                ": manifold degenerate for a single spin (N >= 2 required)");
}

// g_xx as a function of Theta only (the metric is Phi- and xi-independent).
double g_xx_of(const SystemConfig& config, double theta) {
    const double n = config.n_spins;
    const double s = config.spin.s();
    const double st = std::sin(theta), ct = std::cos(theta);
    const double lam = 4.0 * s * (n - 1.0) - 1.0;
    return 0.5 * n * (n - 1.0) * s * s * st * st * (1.0 + lam * ct * ct);
}

std::vector<cdouble> state_at(const SystemConfig& config, double theta, double phi,
                              double xi) {
    return evolve(build_initial_state(config, theta, phi), xi).amplitudes;
}

}  // namespace

MetricTensor3 metric_closed_form(const SystemConfig& config, const ParamPoint& point) {
    const double n = config.n_spins;
    const double s = config.spin.s();
    const double st = std::sin(point.theta), ct = std::cos(point.theta);
    MetricTensor3 g;
    g.g_tt = 0.5 * n * s;
    g.g_pp = 0.5 * n * s * st * st;
    g.g_xx = g_xx_of(config, point.theta);
    g.g_px = -n * (n - 1.0) * s * s * ct * st * st;
    return g;
}

MetricTensor2 metric_reduced(const SystemConfig& config, double theta) {
    return {0.5 * config.n_spins * config.spin.s(), g_xx_of(config, theta)};
}

MetricTensor3Full metric_numeric_full(const SystemConfig& config,
                                      const ParamPoint& point, double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("metric_numeric: step must be positive");
    if (point.theta < 2.0 * step || point.theta > pi - 2.0 * step)
        throw std::domain_error(
            "metric_numeric: theta too close to the poles for the stencil");

    const double t = point.theta, p = point.phi, x = point.xi;
    const std::vector<cdouble> center = state_at(config, t, p, x);
    const std::size_t dim = center.size();

    // central-difference tangent vectors d|psi>/d(theta, phi, xi)
    std::vector<std::vector<cdouble>> tangent(3);
    const double lo[3][3] = {{t - step, p, x}, {t, p - step, x}, {t, p, x - step}};
    const double hi[3][3] = {{t + step, p, x}, {t, p + step, x}, {t, p, x + step}};
    for (int a = 0; a < 3; ++a) {
        const std::vector<cdouble> plus = state_at(config, hi[a][0], hi[a][1], hi[a][2]);
        const std::vector<cdouble> minus = state_at(config, lo[a][0], lo[a][1], lo[a][2]);
        tangent[a].resize(dim);
        const double inv = 1.0 / (2.0 * step);
        for (std::size_t i = 0; i < dim; ++i)
            tangent[a][i] = (plus[i] - minus[i]) * inv;
    }

    auto qgt = [&](int a, int b) {
        const cdouble ab = kernels::dot_conj(tangent[a], tangent[b]);
        const cdouble a0 = kernels::dot_conj(tangent[a], center);
        const cdouble b0 = kernels::dot_conj(center, tangent[b]);
        return (ab - a0 * b0).real();
    };

    MetricTensor3Full g;
    g.g_tt = qgt(0, 0);
    g.g_pp = qgt(1, 1);
    g.g_xx = qgt(2, 2);
    g.g_tp = qgt(0, 1);
    g.g_tx = qgt(0, 2);
    g.g_px = qgt(1, 2);
    return g;
}

MetricTensor3 metric_numeric(const SystemConfig& config, const ParamPoint& point,
                             double step) {
    const MetricTensor3Full full = metric_numeric_full(config, point, step);
    return {full.g_tt, full.g_pp, full.g_xx, full.g_px};
}

double gaussian_curvature(const SystemConfig& config, double theta) {
    require_interacting(config, "gaussian_curvature");
    if (!(theta > 0.0 && theta < pi))
        throw std::domain_error("gaussian_curvature: singular at theta = 0, pi");
    const double n = config.n_spins;
    const double s = config.spin.s();
    const double lam = 4.0 * s * (n - 1.0) - 1.0;
    const double c2 = std::cos(theta) * std::cos(theta);
    const double den = lam * c2 + 1.0;
    return 4.0 / (n * s) * (2.0 - (lam * c2 + 2.0 * s * (n - 1.0) + 1.0) / (den * den));
}

double gaussian_curvature_pole_limit(const SystemConfig& config) {
    require_interacting(config, "gaussian_curvature_pole_limit");
    const double n = config.n_spins;
    const double s = config.spin.s();
    return 4.0 / (n * s) * (2.0 - 3.0 / (8.0 * s * (n - 1.0)));
}

double gaussian_curvature_numeric(const SystemConfig& config, double theta,
                                  double step) {
    require_interacting(config, "gaussian_curvature_numeric");
    if (!(step > 0.0))
        throw std::invalid_argument("gaussian_curvature_numeric: step must be positive");
    if (!(theta > 4.0 * step && theta < pi - 4.0 * step))
        throw std::domain_error("gaussian_curvature_numeric: stencil leaves (0, pi)");

    const double g_tt = 0.5 * config.n_spins * config.spin.s();
    // O(step^4) five-point first derivative; applied at both nesting levels,
    // so the stencil reaches theta +- 4 step.
    auto d5 = [&](auto&& f, double x) {
        return (-f(x + 2.0 * step) + 8.0 * f(x + step) - 8.0 * f(x - step) +
                f(x - 2.0 * step)) /
               (12.0 * step);
    };
    auto g = [&](double th) { return g_xx_of(config, th); };
    auto flux = [&](double th) {
        const double christoffel_txi = d5(g, th) / (2.0 * g(th));
        return std::sqrt(g(th) / g_tt) * christoffel_txi;
    };
    return -d5(flux, theta) / std::sqrt(g_tt * g(theta));
}

double gauss_bonnet_bulk_closed_form(const SystemConfig& config, double xi_max) {
    require_interacting(config, "gauss_bonnet_bulk_closed_form");
    return 4.0 * config.spin.s() * xi_max * (config.n_spins - 1.0);
}

TopologyReport euler_characteristic(const SystemConfig& config, double xi_max,
                                    double epsilon) {
    require_interacting(config, "euler_characteristic");
    if (!(xi_max > 0.0))
        throw std::invalid_argument("euler_characteristic: xi_max must be positive");
    if (!(epsilon > 0.0 && epsilon < pi / 4.0))
        throw std::invalid_argument("euler_characteristic: epsilon must lie in (0, pi/4)");

    const double g_tt = 0.5 * config.n_spins * config.spin.s();
    auto integrand = [&](double th) {
        return gaussian_curvature(config, th) * std::sqrt(g_tt * g_xx_of(config, th));
    };
    const QuadratureResult strip =
        integrate_simpson(integrand, epsilon, pi - epsilon, 1e-6, 512);

    const double s = config.spin.s();
    TopologyReport report;
    report.bulk_integral = xi_max * strip.value;
    report.defect_sum = 2.0 * (2.0 * pi - 2.0 * s * xi_max * (config.n_spins - 1.0));
    report.euler_characteristic =
        (report.bulk_integral + report.defect_sum) / (2.0 * pi);
    return report;
}

}  // namespace spingeo::geometry
