#include "spingeo/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "spingeo/geometry.hpp"

namespace spingeo::dynamics {

namespace {

void check(const SystemConfig& config, const char* who, bool need_coupling = true) {
    if (config.n_spins < 2)
        throw std::domain_error(std::string(who) + ": N >= 2 required");
    if (need_coupling && !(config.coupling > 0.0))
        throw std::invalid_argument(std::string(who) + ": coupling J must be positive");
}

}  // namespace

double speed(const SystemConfig& config, double theta) {
    check(config, "speed");
    return config.coupling * std::sqrt(geometry::metric_reduced(config, theta).g_xx);
}

SpeedMaximum maximize_speed(const SystemConfig& config) {
    check(config, "maximize_speed");
    const double n = config.n_spins;
    const double s = config.spin.s();
    const double lam = 4.0 * s * (n - 1.0) - 1.0;
    const double radicand = 2.0 * s * (n - 1.0) / lam;
    const double theta_max = radicand >= 1.0 ? 0.5 * pi : std::asin(std::sqrt(radicand));
    const double v_max = config.coupling * s * s * (n - 1.0) *
                         std::sqrt(2.0 * n * (n - 1.0) / lam);
    return {theta_max, v_max};
}

double geodesic_distance(const SystemConfig& config, double theta, double xi) {
    check(config, "geodesic_distance", false);
    if (!(xi >= 0.0))
        throw std::invalid_argument("geodesic_distance: xi must be non-negative");
    return std::sqrt(geometry::metric_reduced(config, theta).g_xx) * xi;
}

BrachistochroneSolution brachistochrone(const SystemConfig& config, double xi,
                                        bool trivial_theta_half_pi) {
    check(config, "brachistochrone");
    if (!(xi > 0.0))
        throw std::invalid_argument("brachistochrone: xi must be positive");

    const double n = config.n_spins;
    const double s = config.spin.s();
    const double t_ordinary = xi / config.coupling;

    BrachistochroneSolution out;
    out.s_min = s * std::sqrt(xi * xi * n * (n - 1.0) / 2.0);
    if (trivial_theta_half_pi) {
        out.theta_max = 0.5 * pi;
        out.v_max = speed(config, 0.5 * pi);
        out.tau = out.s_min / out.v_max;  // = t: same point maximizes nothing
    } else {
        const SpeedMaximum m = maximize_speed(config);
        out.theta_max = m.theta_max;
        out.v_max = m.v_max;
        out.tau = out.s_min / out.v_max;
    }
    out.ratio_tau_over_t = out.tau / t_ordinary;
    return out;
}

}  // namespace spingeo::dynamics
