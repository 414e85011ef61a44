#include "spingeo/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "spingeo/concurrence.hpp"
#include "spingeo/dynamics.hpp"
#include "spingeo/geometry.hpp"
#include "spingeo/phases.hpp"
#include "spingeo/state.hpp"
#include "spingeo/sweep.hpp"

namespace spingeo::cli {

namespace {

// |x - ref| relative to ref, floored so exact zeros do not blow up the ratio.
double rel_err(double x, double ref, double floor_scale = 1e-3) {
    return std::abs(x - ref) / std::max(std::abs(ref), floor_scale);
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    return GridSpec{a, b, n}.points();
}

const std::vector<SystemConfig>& oracle_configs() {
    static const std::vector<SystemConfig> configs = {
        SystemConfig(2, SpinValue(1), 1.0), SystemConfig(2, SpinValue(2), 1.0),
        SystemConfig(3, SpinValue(1), 1.0), SystemConfig(3, SpinValue(2), 1.0),
        SystemConfig(4, SpinValue(1), 1.0)};
    return configs;
}

CheckResult check_metric_oracle() {
    CheckResult r{"metric-oracle", 0.0, 1e-6, false, ""};
    std::size_t points = 0;
    for (const SystemConfig& config : oracle_configs())
        for (double theta : linspace(0.1, pi - 0.1, 20))
            for (double xi : linspace(0.0, 2.0 * pi, 8)) {
                const ParamPoint p(theta, 0.7, xi);
                const geometry::MetricTensor3Full fd =
                    geometry::metric_numeric_full(config, p);
                const geometry::MetricTensor3 cf =
                    geometry::metric_closed_form(config, p);
                const double errs[] = {
                    rel_err(fd.g_tt, cf.g_tt), rel_err(fd.g_pp, cf.g_pp),
                    rel_err(fd.g_xx, cf.g_xx), rel_err(fd.g_px, cf.g_px),
                    rel_err(fd.g_tp, 0.0),     rel_err(fd.g_tx, 0.0)};
                for (double e : errs) r.worst_error = std::max(r.worst_error, e);
                ++points;
            }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "finite differences vs closed form, " + std::to_string(points) +
               " grid points";
    return r;
}

CheckResult check_curvature_oracle(double reference_fudge) {
    CheckResult r{"curvature-oracle", 0.0, 1e-4, false, ""};
    std::size_t points = 0;
    for (const SystemConfig& config : oracle_configs())
        for (double theta : linspace(0.2, pi - 0.2, 25)) {
            const double numeric = geometry::gaussian_curvature_numeric(config, theta);
            const double closed =
                geometry::gaussian_curvature(config, theta) * reference_fudge;
            r.worst_error = std::max(r.worst_error, rel_err(numeric, closed));
            ++points;
        }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "Christoffel finite differences vs closed form, " +
               std::to_string(points) + " grid points";
    return r;
}

CheckResult check_curvature_negative() {
    CheckResult r{"curvature-negative", 0.0, 0.0, false, ""};
    const SystemConfig config(3, SpinValue(2), 1.0);
    double min_k = 0.0;
    for (double theta : linspace(0.05, pi - 0.05, 101))
        min_k = std::min(min_k, geometry::gaussian_curvature(config, theta));
    r.worst_error = min_k;
    r.pass = min_k < 0.0;
    r.detail = "minimum K over theta for N=3, s=1 (pass if negative)";
    return r;
}

CheckResult check_gauss_bonnet() {
    CheckResult r{"gauss-bonnet", 0.0, 1e-2, false, ""};
    struct Combo {
        int n, twice_spin;
        double xi_max;
    };
    const Combo combos[] = {{2, 1, pi}, {2, 2, 1.5}, {3, 2, 1.0}, {4, 1, 2.0}};
    for (const Combo& c : combos)
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            const SystemConfig config(c.n, SpinValue(c.twice_spin), 1.0);
            const geometry::TopologyReport t =
                geometry::euler_characteristic(config, c.xi_max, eps);
            r.worst_error =
                std::max(r.worst_error, std::abs(t.euler_characteristic - 2.0));
        }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "|chi - 2| over 4 (N, s, xi_max) combos and eps in {1e-2,1e-3,1e-4}";
    return r;
}

CheckResult check_gauss_bonnet_bulk() {
    CheckResult r{"gauss-bonnet-bulk", 0.0, 1e-2, false, ""};
    const SystemConfig config(3, SpinValue(2), 1.0);
    const geometry::TopologyReport t = geometry::euler_characteristic(config, 1.0, 1e-3);
    const double closed = geometry::gauss_bonnet_bulk_closed_form(config, 1.0);
    r.worst_error = rel_err(t.bulk_integral, closed);
    r.pass = r.worst_error < r.tolerance;
    r.detail = "strip quadrature vs closed-form bulk 4 s xi_max (N-1) at (3, 1, 1.0)";
    return r;
}

CheckResult check_overlap_dual_route() {
    CheckResult r{"overlap-dual-route", 0.0, 1e-12, false, ""};
    for (const SystemConfig& config : oracle_configs())
        for (double theta : {0.3, 1.2, 2.6})
            for (double xi : {0.0, 0.7, 3.9}) {
                const ParamPoint p(theta, 1.1, xi);
                const PureState psi = build_initial_state(config, p.theta, p.phi);
                const cdouble via_states = overlap(psi, evolve(psi, p.xi));
                const cdouble via_weights = phases::overlap_closed_form(config, p);
                r.worst_error =
                    std::max(r.worst_error, std::abs(via_states - via_weights));
            }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "state-vector inner product vs direct multi-index weight sum";
    return r;
}

CheckResult check_phase_dynamical() {
    CheckResult r{"phase-dynamical-oracle", 0.0, 1e-12, false, ""};
    for (const SystemConfig& config : oracle_configs())
        for (double theta : linspace(0.0, pi, 7))
            for (double xi : {0.3, 1.0, 2.5}) {
                const ParamPoint p(theta, 0.4, xi);
                const double closed = phases::dynamical_phase(config, p);
                const PureState psi = build_initial_state(config, p.theta, p.phi);
                const double mean = hamiltonian_moments(psi).mean;
                const double via_moments = -mean * p.xi / config.coupling;
                r.worst_error = std::max(r.worst_error, std::abs(closed - via_moments));
            }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "closed form vs -<H> t from the dense state layer";
    return r;
}

CheckResult check_phase_decomposition() {
    CheckResult r{"phase-decomposition", 0.0, 1e-12, false, ""};
    for (const SystemConfig& config : oracle_configs())
        for (double theta : {0.35, 1.1, 2.0})
            for (double xi : {0.25, 1.7}) {
                const ParamPoint p(theta, 0.9, xi);
                const phases::PhaseBreakdown b = phases::geometric_phase(config, p);
                const double defect = reduce_angle(
                    b.geometric_phase - (b.global_phase - b.dynamical_phase));
                r.worst_error = std::max(r.worst_error, std::abs(defect));
            }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "geometric = global - dynamical (mod 2 pi)";
    return r;
}

CheckResult check_phase_short_time_order() {
    CheckResult r{"phase-short-time-order", 0.0, 2.9, false, ""};
    const double xis[] = {1e-1, 1e-2, 1e-3};
    double min_order = 99.0;
    const SystemConfig configs[] = {SystemConfig(2, SpinValue(1), 1.0),
                                    SystemConfig(2, SpinValue(2), 1.0),
                                    SystemConfig(3, SpinValue(1), 1.0)};
    for (const SystemConfig& config : configs)
        for (double theta : {pi / 3.0, 1.0, 2.0}) {
            double err[3];
            for (int i = 0; i < 3; ++i) {
                const ParamPoint p(theta, 0.0, xis[i]);
                const phases::PhaseBreakdown exact = phases::geometric_phase(config, p);
                err[i] = std::abs(phases::geometric_phase_short_time(config, p) -
                                  exact.geometric_phase);
            }
            for (int i = 0; i + 1 < 3; ++i) {
                if (err[i + 1] < 1e-14) continue;  // below noise, order undefined
                const double order =
                    std::log(err[i] / err[i + 1]) / std::log(xis[i] / xis[i + 1]);
                min_order = std::min(min_order, order);
            }
        }
    r.worst_error = min_order;
    r.pass = min_order >= r.tolerance;
    r.detail = "fitted convergence order in xi (pass if >= tolerance)";
    return r;
}

// Connection integral i * closed-path integral of <psi|d psi/dt> dt via a
// five-point stencil derivative and the trapezoid rule. Deliberately avoids
// the diagonal-phase shortcut so it stays an independent route.
double aa_connection_quadrature(const SystemConfig& config, double theta,
                                double xi_max, std::size_t steps) {
    const PureState initial = build_initial_state(config, theta, 0.3);
    const double delta = 2e-4;
    auto integrand = [&](double xi) {
        const PureState m2 = evolve(initial, xi - 2.0 * delta);
        const PureState m1 = evolve(initial, xi - delta);
        const PureState p1 = evolve(initial, xi + delta);
        const PureState p2 = evolve(initial, xi + 2.0 * delta);
        const PureState center = evolve(initial, xi);
        std::vector<cdouble> deriv(center.amplitudes.size());
        const double inv = 1.0 / (12.0 * delta);
        for (std::size_t i = 0; i < deriv.size(); ++i)
            deriv[i] = (-p2.amplitudes[i] + 8.0 * p1.amplitudes[i] -
                        8.0 * m1.amplitudes[i] + m2.amplitudes[i]) *
                       inv;
        PureState dstate{center.config, std::move(deriv)};
        // i <psi|psi'> has the real value -Im <psi|psi'>
        return -overlap(center, dstate).imag();
    };
    const double h = xi_max / static_cast<double>(steps);
    double acc = 0.5 * (integrand(0.0) + integrand(xi_max));
    for (std::size_t k = 1; k < steps; ++k)
        acc += integrand(h * static_cast<double>(k));
    return acc * h;
}

CheckResult check_phase_aa_quadrature() {
    CheckResult r{"phase-aa-quadrature", 0.0, 1e-6, false, ""};
    const SystemConfig configs[] = {SystemConfig(2, SpinValue(1), 1.0),
                                    SystemConfig(3, SpinValue(1), 1.0),
                                    SystemConfig(2, SpinValue(2), 1.0),
                                    SystemConfig(2, SpinValue(4), 1.0)};
    for (const SystemConfig& config : configs)
        for (double theta : {0.4, 1.2}) {
            const double period = evolution_ray_period(config);
            const double closed = phases::aa_phase(config, theta, period);
            const double quad =
                aa_connection_quadrature(config, theta, period, 12000);
            r.worst_error = std::max(r.worst_error, std::abs(closed - quad));
        }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "closed form vs trapezoid connection integral, 12000 steps";
    return r;
}

CheckResult check_speed_uncertainty() {
    CheckResult r{"speed-uncertainty", 0.0, 1e-9, false, ""};
    for (const SystemConfig& base : oracle_configs())
        for (double j : {0.7, 1.0, 1.3})
            for (double theta : linspace(0.0, pi, 9)) {
                const SystemConfig config(base.n_spins, base.spin, j);
                const double v = dynamics::speed(config, theta);
                const PureState psi = build_initial_state(config, theta, 0.2);
                const double de = hamiltonian_moments(psi).uncertainty();
                r.worst_error = std::max(r.worst_error, std::abs(v - de));
            }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "J sqrt(g_xx) vs Delta E from the dense state layer";
    return r;
}

CheckResult check_brachistochrone_ratio() {
    CheckResult r{"brachistochrone-ratio", 0.0, 1e-12, false, ""};
    for (const SystemConfig& config : oracle_configs())
        for (double xi : {0.2, 1.0, 3.0}) {
            const dynamics::BrachistochroneSolution b =
                dynamics::brachistochrone(config, xi);
            const double n1 = config.n_spins - 1.0;
            const double s = config.spin.s();
            const double closed = std::sqrt(4.0 * s * n1 - 1.0) / (2.0 * s * n1);
            r.worst_error =
                std::max(r.worst_error, std::abs(b.ratio_tau_over_t - closed));
            // independent quotient of the closed-form extremes
            const double quotient = b.s_min / (b.v_max * xi / config.coupling);
            r.worst_error =
                std::max(r.worst_error, std::abs(b.ratio_tau_over_t - quotient));
        }
    const dynamics::BrachistochroneSolution two_qubit =
        dynamics::brachistochrone(SystemConfig(2, SpinValue(1), 1.0), 1.0);
    r.worst_error =
        std::max(r.worst_error, std::abs(two_qubit.ratio_tau_over_t - 1.0));
    r.pass = r.worst_error < r.tolerance;
    r.detail = "tau/t vs closed form, vs S_min/(V_max t), and = 1 for two qubits";
    return r;
}

CheckResult check_brachistochrone_monotone() {
    CheckResult r{"brachistochrone-monotone", 0.0, 0.0, true, ""};
    auto ratio = [](int n, int twice_spin) {
        return dynamics::brachistochrone(SystemConfig(n, SpinValue(twice_spin), 1.0), 1.0)
            .ratio_tau_over_t;
    };
    for (int twice_spin : {1, 2}) {
        double prev = ratio(2, twice_spin);
        for (int n : {3, 4, 8, 32, 128}) {
            const double cur = ratio(n, twice_spin);
            r.worst_error = std::max(r.worst_error, cur - prev);  // must decrease
            prev = cur;
        }
    }
    for (int n : {2, 3}) {
        double prev = ratio(n, 1);
        for (int twice_spin = 2; twice_spin <= 8; ++twice_spin) {
            const double cur = ratio(n, twice_spin);
            r.worst_error = std::max(r.worst_error, cur - prev);
            prev = cur;
        }
    }
    r.pass = r.worst_error <= 0.0;
    r.detail = "tau/t strictly decreasing in N and in s (worst increase shown)";
    return r;
}

CheckResult check_concurrence_two_qubit() {
    CheckResult r{"concurrence-two-qubit", 0.0, 1e-12, false, ""};
    for (double xi : linspace(0.0, 3.0, 13)) {
        const double exact =
            entanglement::iconcurrence_exact(SpinValue(1), 0.5 * pi, 0.0, xi);
        r.worst_error = std::max(r.worst_error, std::abs(exact - std::abs(std::sin(xi))));
    }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "C(s=1/2, theta=pi/2, xi) vs |sin xi|";
    return r;
}

CheckResult check_concurrence_short_time_order() {
    CheckResult r{"concurrence-short-time-order", 0.0, 1.9, false, ""};
    const double xis[] = {0.04, 0.02, 0.01};
    double min_order = 99.0;
    double kappa = 0.0;
    for (int twice_spin = 1; twice_spin <= 6; ++twice_spin)
        for (double theta : {0.6, 0.5 * pi, 2.2}) {
            double err[3];
            for (int i = 0; i < 3; ++i) {
                const SpinValue spin(twice_spin);
                err[i] = std::abs(
                    entanglement::iconcurrence_exact(spin, theta, 0.0, xis[i]) -
                    entanglement::iconcurrence_short_time(spin, theta, xis[i]));
                kappa = std::max(kappa, err[i] / (xis[i] * xis[i]));
            }
            for (int i = 0; i + 1 < 3; ++i) {
                if (err[i + 1] < 1e-14) continue;
                min_order =
                    std::min(min_order, std::log(err[i] / err[i + 1]) /
                                            std::log(xis[i] / xis[i + 1]));
            }
        }
    r.worst_error = min_order;
    r.pass = min_order >= r.tolerance;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", kappa);
    r.detail = std::string("fitted order (pass if >= tolerance); kappa = ") + buf;
    return r;
}

CheckResult check_substitution_consistency() {
    CheckResult r{"substitution-consistency", 0.0, 1e-10, false, ""};
    auto rel = [](double x, double ref) {
        return std::abs(x - ref) / std::max(1.0, std::abs(ref));
    };
    for (int twice_spin : {1, 2, 3, 4})
        for (double theta : linspace(0.15, pi - 0.15, 12))
            for (double xi : {1e-3, 0.1, 0.5, 1.0, 2.0}) {
                const SpinValue spin(twice_spin);
                const double s = spin.s();
                const SystemConfig config(2, spin, 1.0);
                const double c = entanglement::iconcurrence_short_time(spin, theta, xi);
                const entanglement::ConcurrenceContext ctx(spin, xi, xi, c);

                // chain rule dC = (dC/dTheta) dTheta + (dC/dxi) dxi, solved for
                // dTheta and pushed through the Theta-side metric; this
                // arrangement compares coefficient against coefficient without
                // the catastrophic cancellation of the reverse pullback
                const entanglement::ConcurrenceMetric gc =
                    entanglement::metric_from_concurrence(ctx);
                const double dc_dtheta = 4.0 * xi * s * std::sin(theta) * std::cos(theta);
                const double dc_dxi = 2.0 * s * std::sin(theta) * std::sin(theta);
                const geometry::MetricTensor2 gt = geometry::metric_reduced(config, theta);
                const double jac2 = dc_dtheta * dc_dtheta;
                r.worst_error = std::max(r.worst_error, rel(gc.g_cc, gt.g_tt / jac2));
                r.worst_error = std::max(
                    r.worst_error, rel(gc.g_cx, -gt.g_tt * dc_dxi / jac2));
                r.worst_error = std::max(
                    r.worst_error,
                    rel(gc.g_xx, gt.g_tt * dc_dxi * dc_dxi / jac2 + gt.g_xx));

                // curvature, phase, speed, distance, optimal time
                r.worst_error =
                    std::max(r.worst_error,
                             rel(entanglement::curvature_from_concurrence(ctx),
                                 geometry::gaussian_curvature(config, theta)));
                const ParamPoint p(theta, 0.0, xi);
                r.worst_error = std::max(
                    r.worst_error,
                    rel(entanglement::phase_from_concurrence(ctx),
                        phases::geometric_phase_short_time(config, p)));
                r.worst_error =
                    std::max(r.worst_error,
                             rel(entanglement::speed_from_concurrence(ctx, 1.0),
                                 dynamics::speed(config, theta)));
                const entanglement::DistanceTime dt =
                    entanglement::distance_and_time_from_concurrence(ctx, 1.0);
                r.worst_error = std::max(
                    r.worst_error,
                    rel(dt.distance, dynamics::geodesic_distance(config, theta, xi)));
                const double tau_theta =
                    dynamics::geodesic_distance(config, theta, xi) /
                    dynamics::maximize_speed(config).v_max;
                r.worst_error = std::max(r.worst_error, rel(dt.optimal_time, tau_theta));
            }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "C-parametrized forms vs Theta-parametrized N=2 forms under C = 2 xi s sin^2";
    return r;
}

CheckResult check_figure_endpoints() {
    CheckResult r{"figure-endpoints", 0.0, 1e-9, false, ""};
    const double xpm = 1e-3;
    SweepSpec spec;
    spec.quantity = Quantity::fig1;
    spec.xi_prime_max = xpm;
    const SweepResult fig1 = run_sweep(spec);
    for (int twice_spin : {1, 2, 3, 4}) {
        const SpinValue spin(twice_spin);
        const double s = spin.s();
        const double cmax = 2.0 * s * xpm;

        // rows are grouped by twice_spin in {1,2,3,4}; pick this spin's block
        const std::size_t per_spin = fig1.rows.size() / 4;
        const std::size_t block = static_cast<std::size_t>(twice_spin - 1) * per_spin;
        const double k_first = fig1.rows[block].values[3];
        const double k_last = fig1.rows[block + per_spin - 1].values[3];
        r.worst_error = std::max(
            r.worst_error, std::abs(k_first - entanglement::curvature_max(spin)));
        r.worst_error = std::max(
            r.worst_error, std::abs(k_last - entanglement::curvature_min(spin, 1.0)));

        // fig3 peak: V at the critical concurrence equals V_max and dominates
        const entanglement::ConcurrenceContext probe(spin, xpm, xpm, 0.5 * cmax);
        const double c_star = entanglement::critical_c(probe);
        const entanglement::ConcurrenceContext at_peak(spin, xpm, xpm, c_star);
        const double v_peak = entanglement::speed_from_concurrence(at_peak, 1.0);
        r.worst_error = std::max(
            r.worst_error,
            std::abs(v_peak - entanglement::v_max_two_spin(spin, 1.0)));
        for (double off : {-0.02, 0.02}) {
            const double c_near =
                std::clamp(c_star + off * cmax, 0.0, cmax);
            if (c_near == c_star) continue;
            const entanglement::ConcurrenceContext near(spin, xpm, xpm, c_near);
            if (entanglement::speed_from_concurrence(near, 1.0) > v_peak + 1e-15)
                r.worst_error = std::max(r.worst_error, 1.0);
        }

        // fig2 endpoints: no phase at C_max; Theta = 0 short-time value at C = 0
        const entanglement::ConcurrenceContext at_zero(spin, xpm, xpm, 0.0);
        const entanglement::ConcurrenceContext at_top(spin, xpm, xpm, cmax);
        r.worst_error = std::max(
            r.worst_error, std::abs(entanglement::phase_from_concurrence(at_top)));
        r.worst_error = std::max(
            r.worst_error,
            std::abs(entanglement::phase_from_concurrence(at_zero) -
                     phases::geometric_phase_short_time(SystemConfig(2, spin, 1.0),
                                                        ParamPoint(0.0, 0.0, xpm))));

        // fig4/fig5 endpoints: S(0) = 0, S(C') = V_max t, tau(0) = 0, tau(C') = t
        const entanglement::DistanceTime zero_dt =
            entanglement::distance_and_time_from_concurrence(at_zero, 1.0);
        r.worst_error = std::max(r.worst_error, std::abs(zero_dt.distance));
        r.worst_error = std::max(r.worst_error, std::abs(zero_dt.optimal_time));
        const entanglement::DistanceTime peak_dt =
            entanglement::distance_and_time_from_concurrence(at_peak, 1.0);
        r.worst_error = std::max(
            r.worst_error,
            std::abs(peak_dt.distance -
                     entanglement::v_max_two_spin(spin, 1.0) * xpm));
        r.worst_error = std::max(r.worst_error, std::abs(peak_dt.optimal_time - xpm));
    }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "fig1 K and fig2 phase endpoints, fig3 peak at C', fig4/5 S and tau";
    return r;
}

CheckResult check_state_json_round_trip() {
    CheckResult r{"state-json-round-trip", 0.0, 1e-15, false, ""};
    for (int n : {1, 2, 3}) {
        const SystemConfig config(n, SpinValue(2), 0.8);
        const PureState psi =
            evolve(build_initial_state(config, 1.1, 2.2), 0.7);
        const PureState back = state_from_json(state_to_json(psi));
        if (!back.config.same_space(psi.config)) r.worst_error = 1.0;
        for (std::size_t i = 0; i < psi.amplitudes.size(); ++i)
            r.worst_error = std::max(
                r.worst_error, std::abs(back.amplitudes[i] - psi.amplitudes[i]));
    }
    r.pass = r.worst_error < r.tolerance;
    r.detail = "row-major-ascending-m amplitude records survive serialization";
    return r;
}

CheckResult check_render_determinism() {
    CheckResult r{"render-determinism", 0.0, 0.0, false, ""};
    SweepSpec spec;
    spec.quantity = Quantity::fig1;
    const std::string a = render_csv(run_sweep(spec));
    const std::string b = render_csv(run_sweep(spec));
    const std::string ja = render_json(run_sweep(spec));
    const std::string jb = render_json(run_sweep(spec));
    r.pass = (a == b) && (ja == jb);
    r.worst_error = r.pass ? 0.0 : 1.0;
    r.detail = "byte-identical CSV and JSON across repeated runs";
    return r;
}

}  // namespace

bool ValidationReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

ValidationReport run_validation(const ValidationOptions& options) {
    if (!options.mutate.empty() && options.mutate != "curvature")
        throw SpecError("mutate", "unknown mutation fixture '" + options.mutate + "'");
    const double curvature_fudge = options.mutate == "curvature" ? 1.0 + 1e-3 : 1.0;

    ValidationReport report;
    report.checks.push_back(check_metric_oracle());
    report.checks.push_back(check_curvature_oracle(curvature_fudge));
    report.checks.push_back(check_curvature_negative());
    report.checks.push_back(check_gauss_bonnet());
    report.checks.push_back(check_gauss_bonnet_bulk());
    report.checks.push_back(check_overlap_dual_route());
    report.checks.push_back(check_phase_dynamical());
    report.checks.push_back(check_phase_decomposition());
    report.checks.push_back(check_phase_short_time_order());
    report.checks.push_back(check_phase_aa_quadrature());
    report.checks.push_back(check_speed_uncertainty());
    report.checks.push_back(check_brachistochrone_ratio());
    report.checks.push_back(check_brachistochrone_monotone());
    report.checks.push_back(check_concurrence_two_qubit());
    report.checks.push_back(check_concurrence_short_time_order());
    report.checks.push_back(check_substitution_consistency());
    report.checks.push_back(check_figure_endpoints());
    report.checks.push_back(check_state_json_round_trip());
    report.checks.push_back(check_render_determinism());
    return report;
}

std::string render_report(const ValidationReport& report) {
    std::string out;
    for (const CheckResult& c : report.checks) {
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] %-30s worst %.6e  tol %.1e  %s\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.worst_error,
                      c.tolerance, c.detail.c_str());
        out += line;
    }
    out += report.all_pass() ? "validate: all checks passed\n"
                             : "validate: CHECK FAILURES PRESENT\n";
    return out;
}

}  // namespace spingeo::cli
