// Scalar reference kernels. These are the semantics every SIMD variant must
// reproduce; keep them simple enough to audit by eye.
#include "spingeo/kernels.hpp"

namespace spingeo::kernels::scalar_impl {

double sum_abs2(const cdouble* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = a[i].real(), im = a[i].imag();
        acc += re * re + im * im;
    }
    return acc;
}

cdouble dot_conj(const cdouble* a, const cdouble* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

void apply_phase_table(cdouble* a, const std::int32_t* idx, const cdouble* table,
                       std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cdouble t = table[idx[i]];
        const double ar = a[i].real(), ai = a[i].imag();
        a[i] = {ar * t.real() - ai * t.imag(), ar * t.imag() + ai * t.real()};
    }
}

void weighted_moments(const cdouble* a, const double* w, std::size_t n,
                      double& m1, double& m2) {
    double acc1 = 0.0, acc2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
        acc1 += w[i] * p;
        acc2 += w[i] * w[i] * p;
    }
    m1 = acc1;
    m2 = acc2;
}

}  // namespace spingeo::kernels::scalar_impl
