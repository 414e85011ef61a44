// Evolution speed along the xi-circle, its maximization over Theta, path
// length, and the time-optimal (brachistochrone) solution.
//
// Speed convention: V = J sqrt(g_xx) which equals the energy uncertainty
// Delta E with hbar = 1. The speed-uncertainty identity J sqrt(g_xx) = Delta E
// is this module's central oracle equivalence and is pinned by the tests.
#pragma once

#include "spingeo/types.hpp"

namespace spingeo::dynamics {

struct SpeedMaximum {
    double theta_max;  // speed-maximizing polar angle
    double v_max;
};

struct BrachistochroneSolution {
    double theta_max;        // from maximize_speed
    double v_max;            // maximum evolution speed
    double s_min;            // minimal path length, reached at Theta = pi/2
    double tau;              // optimal time s_min / v_max
    double ratio_tau_over_t; // sqrt(4 s (N-1) - 1) / (2 s (N-1)), in (0, 1]
};

// V(Theta) = J s sqrt(N (N-1) sin^2 T [1 + (4 s (N-1) - 1) cos^2 T] / 2).
// Requires N >= 2 and J > 0.
double speed(const SystemConfig& config, double theta);

// sin(Theta_max) = sqrt(2 s (N-1) / (4 s (N-1) - 1)), clamped to pi/2 when the
// radicand reaches 1 (exactly the two-qubit case);
// V_max = J s^2 (N-1) sqrt(2 N (N-1) / (4 s (N-1) - 1)).
SpeedMaximum maximize_speed(const SystemConfig& config);

// Path length along the xi-circle: S = sqrt(g_xx) * xi (the integrand is
// xi-independent, so the cumulative path integral is linear in xi).
double geodesic_distance(const SystemConfig& config, double theta, double xi);

// Optimal time tau = S_min / V_max and its ratio to the ordinary time t = xi/J.
// With trivial_theta_half_pi the Theta = pi/2 variant is reported instead
// (distance and speed both evaluated at the equator, giving tau = t); that
// variant never beats the ordinary time and is not the default.
BrachistochroneSolution brachistochrone(const SystemConfig& config, double xi,
                                        bool trivial_theta_half_pi = false);

}  // namespace spingeo::dynamics
