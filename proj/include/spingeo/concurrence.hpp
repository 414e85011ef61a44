// Two-qudit (N = 2) I-concurrence and the concurrence-parametrized forms of
// the metric, curvature, geometric phase, evolution speed, path length and
// optimal time.
//
// Every C-parametrized expression here reduces the recurring combination
// tilde_xi * C / C_max = C / (2 s xi), so composing with the short-time law
// C = 2 xi s sin^2(Theta) reproduces the Theta-parametrized N = 2 forms
// exactly; the test suite pins those substitution identities to 1e-10.
// Inputs with xi = 0 are rejected rather than limit-evaluated.
#pragma once

#include "spingeo/types.hpp"

namespace spingeo::entanglement {

// Evaluation context for the C-parametrized family. xi_prime_max is the small
// fixed horizon constant (the figures use 1e-3); c_max = 2 s xi_prime_max.
struct ConcurrenceContext {
    SpinValue spin;
    double xi;            // evaluation time, > 0 wherever tilde_xi appears
    double xi_prime_max;  // horizon constant, > 0
    double c;             // I-concurrence value, >= 0

    ConcurrenceContext(SpinValue spin_, double xi_, double xi_prime_max_, double c_);

    double c_max() const { return 2.0 * spin.s() * xi_prime_max; }
    double tilde_xi() const;               // xi_prime_max / xi
    double entanglement_fraction() const;  // tilde_xi * c / c_max == c / (2 s xi)
};

// Exact I-concurrence C = sqrt(2 (1 - Tr rho_1^2)) of the evolved two-spin
// state, via dense partial trace. Symmetric in which spin is traced out.
double iconcurrence_exact(SpinValue spin, double theta, double phi, double xi);

// Short-time law C = 2 xi s sin^2(Theta); exact to O(xi^3) absolute.
double iconcurrence_short_time(SpinValue spin, double theta, double xi);

// Metric in (C, xi) coordinates. The dC^2 / dC dxi / first dxi^2 pieces are
// the chain-rule image of (N s / 2) dTheta^2; the remaining dxi^2 piece is
// g_xx of the reduced N = 2 metric with sin^2(Theta) = C/(2 s xi).
struct ConcurrenceMetric {
    double g_cc;           // dC^2 coefficient
    double g_cx;           // symmetrized dC dxi coefficient
    double g_xx;           // full dxi^2 coefficient
    double one_dim_g_xx;   // line element of the constant-C one-dimensional
                           // manifold (== g_xx; at fixed C only dxi survives)
};

// Requires 0 < c < 2 s xi, where the C(2 s xi - C) prefactor is positive;
// outside that open interval the metric degenerates and a std::domain_error
// is thrown.
ConcurrenceMetric metric_from_concurrence(const ConcurrenceContext& ctx);

// K = (2/s) [2 - ((4s-1)(1-f) + 2s + 1) / ((4s-1)(1-f) + 1)^2],
// f = tilde_xi C / C_max. Monotone decreasing in C.
double curvature_from_concurrence(const ConcurrenceContext& ctx);
double curvature_max(SpinValue spin);                      // K at C = 0
double curvature_min(SpinValue spin, double tilde_xi);     // K at C = C_max

// Short-time geometric phase in terms of the concurrence (leading term
// 2 xi s^2 (1-f) minus the arctan correction).
double phase_from_concurrence(const ConcurrenceContext& ctx);

// V = J s sqrt(f (4s - (4s-1) f)), f = tilde_xi C / C_max.
double speed_from_concurrence(const ConcurrenceContext& ctx, double coupling);

// Concurrence maximizing the speed: C' = 2 s C_max / ((4s-1) tilde_xi),
// clamped to C_max when it lands beyond it (exactly s = 1/2 at tilde_xi = 1).
double critical_c(const ConcurrenceContext& ctx);

// V_max = 2 J s^2 / sqrt(4s - 1), the N = 2 maximum speed.
double v_max_two_spin(SpinValue spin, double coupling);

struct DistanceTime {
    double distance;      // path length S
    double optimal_time;  // tau_C = S / V_max; <= t with equality only at C'
};

DistanceTime distance_and_time_from_concurrence(const ConcurrenceContext& ctx,
                                                double coupling);

}  // namespace spingeo::entanglement
