// Global, dynamical, geometric and Aharonov-Anandan phases of the evolving
// coherent state. Phase extraction uses the two-argument arctangent of the
// overlap (principal value in (-pi, pi]); a single-argument arctan would be
// branch-ambiguous by pi.
#pragma once

#include <vector>

#include "spingeo/types.hpp"

namespace spingeo::phases {

struct PhaseBreakdown {
    double global_phase;     // arg <psi_i | psi(xi)>, in (-pi, pi]
    double dynamical_phase;  // -<H> t = -xi s^2 N (N-1) cos^2(Theta), unreduced
    double geometric_phase;  // global - dynamical, reduced to (-pi, pi]
};

// Overlap <psi_i|psi(xi)> evaluated as the direct multi-index weight sum
// (product-binomial weights times the diagonal phase). Algebraically identical
// to overlap(build_initial_state(...), evolve(...)), but computed along an
// independent code path; tests pin the two routes against each other.
cdouble overlap_closed_form(const SystemConfig& config, const ParamPoint& point);

// arg <psi_i|psi(xi)>. Throws std::domain_error if |overlap| <= 1e-12 (phase
// undefined at orthogonality).
double global_phase(const SystemConfig& config, const ParamPoint& point);

// -xi s^2 N (N-1) cos^2(Theta); equals -<H> t with H time-independent.
double dynamical_phase(const SystemConfig& config, const ParamPoint& point);

PhaseBreakdown geometric_phase(const SystemConfig& config, const ParamPoint& point);

// Short-time expansion of the geometric phase (second order in xi inside the
// arctan). Validity is the caller's concern; the exact route is the oracle.
double geometric_phase_short_time(const SystemConfig& config, const ParamPoint& point);

// Magnitude of the arctan (global) part of the short-time expansion; exposed
// because its decay with growing N or s is a documented trend.
double short_time_global_term(const SystemConfig& config, const ParamPoint& point);

// Aharonov-Anandan phase for the cyclic path of length xi_max:
// xi_max N (N-1) s^2 cos^2(Theta).
double aa_phase(const SystemConfig& config, double theta, double xi_max);

// True when xi_max is a whole number of ray periods (2 pi for half-integer s,
// pi for integer s), i.e. the evolution genuinely closes.
bool aa_cycle_is_closed(const SystemConfig& config, double xi_max);

// Nearest-branch continuation of a wrapped phase sequence sampled along a
// path: each value is shifted by the 2 pi multiple closest to its
// predecessor. The first sample is kept as given. For plotting; the wrapped
// principal values stay the canonical output.
std::vector<double> unwrap_nearest_branch(const std::vector<double>& wrapped);

}  // namespace spingeo::phases
