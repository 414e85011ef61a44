// Core domain types: spin quantum numbers, system configuration, manifold
// coordinates. All spin projections are stored as integer twice-values so that
// phase exponents stay exact until the final multiply by the dimensionless
// time xi = J*t.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spingeo {

inline constexpr double pi = 3.14159265358979323846;

using cdouble = std::complex<double>;

// Spin magnitude s stored as the integer 2s. Magnetic quantum numbers m run
// over twice_m in {-twice_spin, -twice_spin+2, ..., +twice_spin}.
struct SpinValue {
    int twice_spin = 1;

    explicit SpinValue(int twice_spin_) : twice_spin(twice_spin_) {
        if (twice_spin < 1)
            throw std::invalid_argument("SpinValue: twice_spin must be >= 1");
    }

    double s() const { return 0.5 * twice_spin; }
    int dim() const { return twice_spin + 1; }           // d = 2s+1
    bool is_half_integer() const { return twice_spin % 2 != 0; }
    // twice_m for level index j in [0, d), ascending order
    int twice_m(int j) const { return 2 * j - twice_spin; }
    double m(int j) const { return 0.5 * twice_m(j); }
};

// N identical spin-s sites coupled pairwise with exchange constant J.
// Hilbert dimension d^N is capped so every dense operation stays desk-scale.
struct SystemConfig {
    int n_spins = 1;
    SpinValue spin{1};
    double coupling = 1.0;                               // J, hbar = 1
    std::size_t dim_cap = std::size_t{1} << 20;

    SystemConfig(int n, SpinValue sp, double j = 1.0,
                 std::size_t cap = std::size_t{1} << 20)
        : n_spins(n), spin(sp), coupling(j), dim_cap(cap) {
        if (n_spins < 1)
            throw std::invalid_argument("SystemConfig: n_spins must be >= 1");
        if (!std::isfinite(coupling))
            throw std::invalid_argument("SystemConfig: coupling must be finite");
    }

    // d^N, throwing once the configured cap is exceeded
    std::size_t dim() const {
        const std::size_t d = static_cast<std::size_t>(spin.dim());
        std::size_t total = 1;
        for (int k = 0; k < n_spins; ++k) {
            if (total > dim_cap / d)
                throw std::length_error(
                    "SystemConfig: Hilbert dimension d^N exceeds cap (" +
                    std::to_string(dim_cap) + ")");
            total *= d;
        }
        return total;
    }

    bool same_space(const SystemConfig& o) const {
        return n_spins == o.n_spins && spin.twice_spin == o.spin.twice_spin;
    }
};

// Wrap an angle to the principal interval (-pi, pi].
inline double reduce_angle(double x) {
    double r = std::remainder(x, 2.0 * pi);
    if (r <= -pi) r += 2.0 * pi;
    return r;
}

// Manifold coordinates (Theta, Phi, xi). Theta must land in [0, pi]; Phi is
// wrapped into [0, 2*pi). xi = J*t is kept as given (stencil code probes
// negative values; operations that need xi > 0 check for themselves).
struct ParamPoint {
    double theta = 0.0;
    double phi = 0.0;
    double xi = 0.0;

    ParamPoint(double theta_, double phi_ = 0.0, double xi_ = 0.0)
        : theta(theta_), phi(phi_), xi(xi_) {
        if (!(theta >= 0.0 && theta <= pi))
            throw std::invalid_argument("ParamPoint: theta must be in [0, pi]");
        if (!std::isfinite(phi) || !std::isfinite(xi))
            throw std::invalid_argument("ParamPoint: phi/xi must be finite");
        phi = phi - 2.0 * pi * std::floor(phi / (2.0 * pi));
        if (phi >= 2.0 * pi) phi = 0.0;
    }
};

}  // namespace spingeo
