// Test-side oracle machinery, kept independent of the code paths it checks:
// dense matrix exponential (scaling and squaring), Kronecker products, a
// golden-section maximizer, and small random helpers with fixed seeds.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "spingeo/state.hpp"
#include "spingeo/types.hpp"

namespace oracles {

using spingeo::cdouble;
using spingeo::CMatrix;

inline CMatrix identity(int n) {
    CMatrix out(n);
    for (int i = 0; i < n; ++i) out.at(i, i) = 1.0;
    return out;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.n * b.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            const cdouble aij = a.at(i, j);
            if (aij == cdouble{0.0, 0.0}) continue;
            for (int k = 0; k < b.n; ++k)
                for (int l = 0; l < b.n; ++l)
                    out.at(i * b.n + k, j * b.n + l) = aij * b.at(k, l);
        }
    return out;
}

inline double one_norm(const CMatrix& m) {
    double worst = 0.0;
    for (int j = 0; j < m.n; ++j) {
        double col = 0.0;
        for (int i = 0; i < m.n; ++i) col += std::abs(m.at(i, j));
        worst = std::max(worst, col);
    }
    return worst;
}

// exp(A) by scaling and squaring with a Taylor series on the scaled matrix.
inline CMatrix expm(const CMatrix& a) {
    int squarings = 0;
    double norm = one_norm(a);
    while (norm > 0.5) {
        norm *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    CMatrix scaled(a.n);
    for (std::size_t i = 0; i < a.a.size(); ++i) scaled.a[i] = a.a[i] * scale;

    CMatrix result = identity(a.n);
    CMatrix term = identity(a.n);
    for (int k = 1; k <= 40; ++k) {
        term = spingeo::matmul(term, scaled);
        for (std::size_t i = 0; i < term.a.size(); ++i) term.a[i] /= double(k);
        for (std::size_t i = 0; i < result.a.size(); ++i) result.a[i] += term.a[i];
        if (one_norm(term) < 1e-18) break;
    }
    for (int k = 0; k < squarings; ++k) result = spingeo::matmul(result, result);
    return result;
}

inline std::vector<cdouble> matvec(const CMatrix& m, const std::vector<cdouble>& v) {
    std::vector<cdouble> out(v.size(), cdouble{0.0, 0.0});
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

// N-fold operator sum  sum_k I x ... x op_k x ... x I  of a single-site matrix.
inline CMatrix site_sum(const CMatrix& op, int n_sites) {
    const int d = op.n;
    CMatrix acc;
    for (int k = 0; k < n_sites; ++k) {
        CMatrix term(1);
        term.at(0, 0) = 1.0;
        for (int j = 0; j < n_sites; ++j)
            term = kron(term, j == k ? op : identity(d));
        if (k == 0)
            acc = term;
        else
            for (std::size_t i = 0; i < acc.a.size(); ++i) acc.a[i] += term.a[i];
    }
    return acc;
}

// Dense long-range Ising Hamiltonian 2 J sum_{k<l} Sz_k Sz_l from Kronecker
// products of single-site operators (independent of the integer phase route).
inline CMatrix dense_hamiltonian(const spingeo::SystemConfig& config) {
    const spingeo::SpinOperators ops = spingeo::build_spin_operators(config.spin);
    const int d = config.spin.dim();
    const int n = config.n_spins;
    CMatrix h(static_cast<int>(config.dim()));
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            CMatrix term(1);
            term.at(0, 0) = 2.0 * config.coupling;
            for (int j = 0; j < n; ++j)
                term = kron(term, (j == k || j == l) ? ops.sz : identity(d));
            for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] += term.a[i];
        }
    return h;
}

// Golden-section search for the maximum of f on [a, b] (unimodal assumed).
template <typename F>
double golden_section_max(F&& f, double a, double b, double tol = 1e-10) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Golden section alone bottoms out at |theta - theta*| ~ sqrt(eps) near a
// quadratic maximum; refine by bisecting the central-difference derivative,
// whose sign stays reliable down to ~1e-10.
template <typename F>
double smooth_argmax(F&& f, double a, double b) {
    const double coarse = golden_section_max(f, a, b, 1e-6);
    const double h = 1e-5;
    auto deriv = [&](double x) { return (f(x + h) - f(x - h)) / (2.0 * h); };
    double lo = std::max(a, coarse - 1e-3), hi = std::min(b, coarse + 1e-3);
    if (deriv(lo) <= 0.0) return lo == a ? coarse : lo;   // maximum at/near edge
    if (deriv(hi) >= 0.0) return hi == b ? hi : coarse;
    for (int iter = 0; iter < 60; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (deriv(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

}  // namespace oracles
