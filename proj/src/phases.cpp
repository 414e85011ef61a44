#include "spingeo/phases.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spingeo/state.hpp"

namespace spingeo::phases {

namespace {

double binomial(int n, int k) {
    double acc = 1.0;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i)
        acc = acc * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(acc);
}

double dynamical_magnitude(const SystemConfig& config, const ParamPoint& point) {
    const double n = config.n_spins;
    const double s = config.spin.s();
    const double c = std::cos(point.theta);
    return point.xi * s * s * n * (n - 1.0) * c * c;
}

}  // namespace

cdouble overlap_closed_form(const SystemConfig& config, const ParamPoint& point) {
    const int d = config.spin.dim();
    const int ts = config.spin.twice_spin;
    const double p = std::sin(0.5 * point.theta) * std::sin(0.5 * point.theta);

    // per-site binomial weights |amplitude|^2
    std::vector<double> site(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        site[static_cast<std::size_t>(j)] =
            binomial(ts, j) * std::pow(p, j) * std::pow(1.0 - p, ts - j);

    std::vector<double> weights{1.0};
    std::vector<double> next;
    for (int k = 0; k < config.n_spins; ++k) {
        next.assign(weights.size() * static_cast<std::size_t>(d), 0.0);
        std::size_t out = 0;
        for (double left : weights)
            for (int j = 0; j < d; ++j) next[out++] = left * site[j];
        weights.swap(next);
    }

    const std::vector<std::int64_t> q = pair_sums(config);
    cdouble acc{0.0, 0.0};
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double angle = -0.5 * point.xi * static_cast<double>(q[i]);
        acc += weights[i] * cdouble{std::cos(angle), std::sin(angle)};
    }
    return acc;
}

double global_phase(const SystemConfig& config, const ParamPoint& point) {
    const PureState initial = build_initial_state(config, point.theta, point.phi);
    const cdouble z = overlap(initial, evolve(initial, point.xi));
    if (std::abs(z) <= 1e-12)
        throw std::domain_error(
            "global_phase: states nearly orthogonal, phase undefined");
    return reduce_angle(std::atan2(z.imag(), z.real()));
}

double dynamical_phase(const SystemConfig& config, const ParamPoint& point) {
    return -dynamical_magnitude(config, point);
}

PhaseBreakdown geometric_phase(const SystemConfig& config, const ParamPoint& point) {
    PhaseBreakdown out;
    out.global_phase = global_phase(config, point);
    out.dynamical_phase = dynamical_phase(config, point);
    out.geometric_phase = reduce_angle(out.global_phase - out.dynamical_phase);
    return out;
}

double geometric_phase_short_time(const SystemConfig& config, const ParamPoint& point) {
    const double n = config.n_spins;
    const double s = config.spin.s();
    const double xi = point.xi;
    const double ct = std::cos(point.theta), st = std::sin(point.theta);
    const double c2 = ct * ct, c4 = c2 * c2;
    const double s2 = st * st, s4 = s2 * s2;
    const double sin2t = 2.0 * st * ct;  // sin(2 Theta)

    const double dyn = xi * s * s * n * (n - 1.0) * c2;
    const double num = 4.0 * dyn;
    const double den =
        4.0 - xi * xi * s * s * n * (n - 1.0) *
                  (s * (n - 1.0) * (2.0 * s * n * c4 + sin2t * sin2t) + s4);
    return -std::atan(num / den) + dyn;
}

double short_time_global_term(const SystemConfig& config, const ParamPoint& point) {
    return std::abs(geometric_phase_short_time(config, point) -
                    dynamical_magnitude(config, point));
}

double aa_phase(const SystemConfig& config, double theta, double xi_max) {
    const double n = config.n_spins;
    const double s = config.spin.s();
    const double c = std::cos(theta);
    return xi_max * n * (n - 1.0) * s * s * c * c;
}

bool aa_cycle_is_closed(const SystemConfig& config, double xi_max) {
    if (!(xi_max > 0.0)) return false;
    const double period = evolution_ray_period(config);
    const double cycles = xi_max / period;
    const double nearest = std::round(cycles);
    return nearest >= 1.0 && std::abs(cycles - nearest) < 1e-9 * std::max(1.0, cycles);
}

std::vector<double> unwrap_nearest_branch(const std::vector<double>& wrapped) {
    std::vector<double> out(wrapped.size());
    for (std::size_t i = 0; i < wrapped.size(); ++i) {
        if (i == 0) {
            out[0] = wrapped[0];
            continue;
        }
        const double turns = std::round((out[i - 1] - wrapped[i]) / (2.0 * pi));
        out[i] = wrapped[i] + 2.0 * pi * turns;
    }
    return out;
}

}  // namespace spingeo::phases
