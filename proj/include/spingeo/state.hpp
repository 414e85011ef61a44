// Dense product-basis state layer for N identical spin-s sites: coherent-state
// construction, diagonal Ising evolution, overlaps, Hamiltonian moments,
// partial traces. Everything here is exact brute force over the d^N basis;
// this is the oracle layer the closed-form modules are tested against.
//
// Basis layout: amplitudes are indexed row-major over (twice_m_1, ..., twice_m_N)
// with twice_m ascending and spin 1 the most significant digit. This layout is
// part of the JSON file format and must not change.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spingeo/types.hpp"

namespace spingeo {

// Small dense complex matrix, row-major. Used for spin operators and reduced
// density matrices; not a general linear-algebra type.
struct CMatrix {
    int n = 0;
    std::vector<cdouble> a;

    CMatrix() = default;
    explicit CMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}

    cdouble& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const cdouble& at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * n + j];
    }
};

CMatrix matmul(const CMatrix& x, const CMatrix& y);
CMatrix matsub(const CMatrix& x, const CMatrix& y);
double frobenius_norm(const CMatrix& x);

struct SpinOperators {
    CMatrix sx, sy, sz;  // d x d, ascending-m basis
};

// Ladder construction: Sz = diag(m), S+/S- with the standard matrix elements,
// Sx = (S+ + S-)/2, Sy = (S+ - S-)/(2i). Satisfies [Sa, Sb] = i eps_abc Sc.
SpinOperators build_spin_operators(SpinValue spin);

struct PureState {
    SystemConfig config;
    std::vector<cdouble> amplitudes;  // length d^N, layout as documented above

    double norm() const;
};

// Normalized product of identical SU(2) coherent states. With
// Z = tan(Theta/2) e^{-i Phi}, the amplitude on (m_1, ..., m_N) is
// (1+|Z|^2)^{-N s} prod_k Z^{s+m_k} sqrt(binom(2s, s+m_k)), evaluated in the
// overflow-free form prod_k sqrt(binom) cos(T/2)^{2s-j_k} sin(T/2)^{j_k}
// e^{-i j_k Phi} with j = s+m. Theta = 0 is the lowest-weight product state
// |-s,...,-s>; Theta = pi (where Z diverges) is constructed directly as the
// antipodal highest-weight product state.
PureState build_initial_state(const SystemConfig& config, double theta, double phi);

// Integer pair sums q_i = sum_{k<l} twice_m_k twice_m_l per basis state,
// so that sum_{k<l} m_k m_l = q_i / 4 exactly. H is diagonal with eigenvalue
// E_i = 2 J sum_{k<l} m_k m_l = J q_i / 2.
std::vector<std::int64_t> pair_sums(const SystemConfig& config);

// Diagonal evolution: amplitude_i *= exp(-i 2 xi sum_{k<l} m_k m_l)
//                                  = exp(-i xi q_i / 2).
// The exponent stays integer until the single multiply by xi. Negative xi is
// allowed (finite-difference stencils use it).
PureState evolve(const PureState& initial, double xi);

// <a|b>. States must live in the same Hilbert space.
cdouble overlap(const PureState& a, const PureState& b);

struct HamiltonianMoments {
    double mean;      // <H>
    double variance;  // <H^2> - <H>^2  (>= -1e-12 up to roundoff)

    double uncertainty() const;  // sqrt(max(variance, 0))
};

HamiltonianMoments hamiltonian_moments(const PureState& state);

struct DensityMatrix {
    int dim = 0;
    CMatrix entries;

    cdouble trace() const;
    double max_hermiticity_defect() const;  // max |rho_ij - conj(rho_ji)|
};

// Reduced density matrix of spin `keep` (1-based), all others traced out.
DensityMatrix partial_trace(const PureState& state, int keep);

// Tr(rho^2) via the elementwise self-product (no eigendecomposition).
double purity(const DensityMatrix& rho);

// Componentwise periodicity of the evolved state in xi. The ray period is
// 2*pi for half-integer s and pi for integer s; shifting xi by it multiplies
// every amplitude by one global sign:
//   half-integer s: (-1)^(N(N-1)/2),   integer s: +1.
// Recorded here from the integer parity of the phase exponents and verified
// empirically in the test suite.
double evolution_ray_period(const SystemConfig& config);
int evolution_period_sign(const SystemConfig& config);

// JSON record {config, layout:"row-major-ascending-m", amplitudes:[[re,im],...]}.
std::string state_to_json(const PureState& state);
PureState state_from_json(const std::string& text);

}  // namespace spingeo
