// Fubini-Study metric of the evolving coherent-state manifold in (Theta, Phi,
// xi) coordinates, its Gaussian curvature, and the Gauss-Bonnet Euler
// characteristic. Closed forms and finite-difference evaluations are kept as
// independent routes; the test suite pins their agreement.
#pragma once

#include "spingeo/types.hpp"

namespace spingeo::geometry {

// Independent components of the symmetric metric in (Theta, Phi, xi); the
// (Theta,Phi) and (Theta,xi) entries vanish identically.
struct MetricTensor3 {
    double g_tt;  // (Theta, Theta)
    double g_pp;  // (Phi, Phi)
    double g_xx;  // (xi, xi)
    double g_px;  // (Phi, xi)
};

// Reduced metric on the (Theta, xi) submanifold at fixed Phi.
struct MetricTensor2 {
    double g_tt;
    double g_xx;
};

// All six entries, as measured by the finite-difference route.
struct MetricTensor3Full {
    double g_tt, g_pp, g_xx, g_tp, g_tx, g_px;
};

struct TopologyReport {
    double bulk_integral;         // integral of K sqrt(g_tt g_xx) over the strip
    double defect_sum;            // conical-defect boundary term
    double euler_characteristic;  // (bulk + defect) / (2 pi)
};

// Closed-form metric:
//   g_tt = N s / 2
//   g_pp = (N s / 2) sin^2(T)
//   g_xx = (1/2) N (N-1) s^2 sin^2(T) [1 + (4 s (N-1) - 1) cos^2(T)]
//   g_px = -N (N-1) s^2 cos(T) sin^2(T)
// The cross component is the honest Re(<dPhi psi|dxi psi> - ...) value for the
// Z = tan(T/2) e^{-i Phi} convention used by the state layer; it equals
// 2 Cov(sum_k m_k, sum_{k<l} m_k m_l) over the coherent-state distribution.
MetricTensor3 metric_closed_form(const SystemConfig& config, const ParamPoint& point);

MetricTensor2 metric_reduced(const SystemConfig& config, double theta);

// Central-difference quantum-geometric-tensor evaluation,
// g_ab = Re(<psi_a|psi_b> - <psi_a|psi><psi|psi_b>), built from the dense
// state layer. Requires theta in [2 step, pi - 2 step].
MetricTensor3 metric_numeric(const SystemConfig& config, const ParamPoint& point,
                             double step = 1e-5);
MetricTensor3Full metric_numeric_full(const SystemConfig& config,
                                      const ParamPoint& point, double step = 1e-5);

// Closed-form Gaussian curvature of the reduced (Theta, xi) manifold,
//   K = (4/(N s)) (2 - [L cos^2 T + 2 s (N-1) + 1] / [L cos^2 T + 1]^2),
//   L = 4 s (N-1) - 1.
// Defined for N >= 2 and Theta strictly inside (0, pi).
double gaussian_curvature(const SystemConfig& config, double theta);

// K(Theta -> 0+) == K(Theta -> pi-): value at the conical points.
double gaussian_curvature_pole_limit(const SystemConfig& config);

// Curvature from the metric via finite-difference Christoffel symbols
//   K = -(g_tt g_xx)^(-1/2) d/dT [ (g_xx/g_tt)^(1/2) Gamma^xi_{T xi} ],
//   Gamma^xi_{T xi} = (d g_xx/dT) / (2 g_xx)
// (the d/dxi terms vanish because the metric is xi-independent).
// Requires theta in (4 step, pi - 4 step).
double gaussian_curvature_numeric(const SystemConfig& config, double theta,
                                  double step = 1e-3);

// Gauss-Bonnet bulk over the full Theta range, in closed form:
// 4 s xi_max (N-1).
double gauss_bonnet_bulk_closed_form(const SystemConfig& config, double xi_max);

// chi = (bulk + defect)/(2 pi) with the bulk integrated over
// Theta in [epsilon, pi - epsilon], xi in [0, xi_max] (composite Simpson,
// >= 512 panels, refined below 1e-6) and the analytic defect
// 2 [2 pi - 2 s xi_max (N-1)] absorbing the excluded caps.
TopologyReport euler_characteristic(const SystemConfig& config, double xi_max,
                                    double epsilon = 1e-3);

}  // namespace spingeo::geometry
