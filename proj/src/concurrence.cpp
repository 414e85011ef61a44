#include "spingeo/concurrence.hpp"

#include <cmath>
#include <stdexcept>

#include "spingeo/state.hpp"

namespace spingeo::entanglement {

ConcurrenceContext::ConcurrenceContext(SpinValue spin_, double xi_,
                                       double xi_prime_max_, double c_)
    : spin(spin_), xi(xi_), xi_prime_max(xi_prime_max_), c(c_) {
    if (!(xi >= 0.0))
        throw std::invalid_argument("ConcurrenceContext: xi must be non-negative");
    if (!(xi_prime_max > 0.0))
        throw std::invalid_argument("ConcurrenceContext: xi_prime_max must be positive");
    if (!(c >= 0.0))
        throw std::invalid_argument("ConcurrenceContext: concurrence must be non-negative");
}

double ConcurrenceContext::tilde_xi() const {
    if (!(xi > 0.0))
        throw std::domain_error("ConcurrenceContext: tilde_xi needs xi > 0");
    return xi_prime_max / xi;
}

double ConcurrenceContext::entanglement_fraction() const {
    if (!(xi > 0.0))
        throw std::domain_error("ConcurrenceContext: fraction needs xi > 0");
    return c / (2.0 * spin.s() * xi);
}

double iconcurrence_exact(SpinValue spin, double theta, double phi, double xi) {
    const SystemConfig config(2, spin, 1.0);
    const PureState state = evolve(build_initial_state(config, theta, phi), xi);
    const double pur = purity(partial_trace(state, 1));
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - pur)));
}

double iconcurrence_short_time(SpinValue spin, double theta, double xi) {
    const double st = std::sin(theta);
    return 2.0 * xi * spin.s() * st * st;
}

ConcurrenceMetric metric_from_concurrence(const ConcurrenceContext& ctx) {
    const double s = ctx.spin.s();
    const double xi = ctx.xi, c = ctx.c;
    if (!(xi > 0.0))
        throw std::domain_error("metric_from_concurrence: xi must be positive");
    const double gap = 2.0 * s * xi - c;
    if (!(c > 0.0 && gap > 0.0))
        throw std::domain_error(
            "metric_from_concurrence: metric degenerate outside 0 < C < 2 s xi");

    const double f = ctx.entanglement_fraction();
    ConcurrenceMetric g;
    g.g_cc = s / (4.0 * c * gap);
    g.g_cx = -s / (4.0 * xi * gap);
    g.g_xx = s * c / (4.0 * xi * xi * gap) +
             (s * c / (2.0 * xi)) * (1.0 + (4.0 * s - 1.0) * (1.0 - f));
    g.one_dim_g_xx = g.g_xx;
    return g;
}

namespace {

double curvature_at_fraction(double s, double f) {
    const double y = (4.0 * s - 1.0) * (1.0 - f) + 1.0;
    return 2.0 / s * (2.0 - (y + 2.0 * s) / (y * y));
}

}  // namespace

double curvature_from_concurrence(const ConcurrenceContext& ctx) {
    return curvature_at_fraction(ctx.spin.s(), ctx.entanglement_fraction());
}

double curvature_max(SpinValue spin) {
    const double s = spin.s();
    return 2.0 / s * (2.0 - 3.0 / (8.0 * s));
}

double curvature_min(SpinValue spin, double tilde_xi) {
    return curvature_at_fraction(spin.s(), tilde_xi);
}

double phase_from_concurrence(const ConcurrenceContext& ctx) {
    const double s = ctx.spin.s();
    const double xi = ctx.xi;
    const double f = ctx.entanglement_fraction();
    const double x = 1.0 - f;  // cos^2(Theta) under the substitution
    const double lead = 2.0 * xi * s * s * x;
    const double den =
        4.0 - 2.0 * xi * xi * s * s *
                  (s * (4.0 * s * x * x + 4.0 * f * x) + f * f);
    return lead - std::atan(4.0 * lead / den);
}

double speed_from_concurrence(const ConcurrenceContext& ctx, double coupling) {
    if (!(coupling > 0.0))
        throw std::invalid_argument("speed_from_concurrence: coupling must be positive");
    const double s = ctx.spin.s();
    const double f = ctx.entanglement_fraction();
    return coupling * s * std::sqrt(f * (4.0 * s - (4.0 * s - 1.0) * f));
}

double critical_c(const ConcurrenceContext& ctx) {
    const double s = ctx.spin.s();
    const double raw = 2.0 * s * ctx.c_max() / ((4.0 * s - 1.0) * ctx.tilde_xi());
    return std::min(raw, ctx.c_max());
}

double v_max_two_spin(SpinValue spin, double coupling) {
    const double s = spin.s();
    return 2.0 * coupling * s * s / std::sqrt(4.0 * s - 1.0);
}

DistanceTime distance_and_time_from_concurrence(const ConcurrenceContext& ctx,
                                                double coupling) {
    if (!(coupling > 0.0))
        throw std::invalid_argument(
            "distance_and_time_from_concurrence: coupling must be positive");
    const double s = ctx.spin.s();
    const double f = ctx.entanglement_fraction();
    const double root = std::sqrt(f * (4.0 * s - (4.0 * s - 1.0) * f));
    DistanceTime out;
    out.distance = s * ctx.xi * root;
    out.optimal_time = out.distance / v_max_two_spin(ctx.spin, coupling);
    return out;
}

}  // namespace spingeo::entanglement
