// NEON kernel variants for aarch64. One complex double per 128-bit register.
#include "spingeo/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace spingeo::kernels::neon_impl {

double sum_abs2(const cdouble* a, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(a);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= 2 * n; i += 2) {
        float64x2_t x = vld1q_f64(p + i);
        acc = vfmaq_f64(acc, x, x);
    }
    double out = vaddvq_f64(acc);
    for (; i < 2 * n; ++i) out += p[i] * p[i];
    return out;
}

cdouble dot_conj(const cdouble* a, const cdouble* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    const float64x2_t sign = {1.0, -1.0};
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t va = vld1q_f64(pa + 2 * i);              // [ar, ai]
        float64x2_t vb = vld1q_f64(pb + 2 * i);              // [br, bi]
        acc_re = vfmaq_f64(acc_re, va, vb);                  // [+ar*br, +ai*bi]
        float64x2_t vb_swap = vextq_f64(vb, vb, 1);          // [bi, br]
        acc_im = vfmaq_f64(acc_im, va, vmulq_f64(vb_swap, sign));  // [+ar*bi, -ai*br]
    }
    return {vaddvq_f64(acc_re), vaddvq_f64(acc_im)};
}

void apply_phase_table(cdouble* a, const std::int32_t* idx, const cdouble* table,
                       std::size_t n) {
    double* pa = reinterpret_cast<double*>(a);
    const double* pt = reinterpret_cast<const double*>(table);
    const float64x2_t sign = {-1.0, 1.0};
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t va = vld1q_f64(pa + 2 * i);                       // [ar, ai]
        float64x2_t vt = vld1q_f64(pt + 2 * static_cast<std::size_t>(idx[i]));
        float64x2_t ar = vdupq_laneq_f64(va, 0);
        float64x2_t ai = vdupq_laneq_f64(va, 1);
        float64x2_t vt_swap = vextq_f64(vt, vt, 1);                   // [ti, tr]
        // [ar*tr - ai*ti, ar*ti + ai*tr]
        float64x2_t res = vfmaq_f64(vmulq_f64(ar, vt),
                                    vmulq_f64(ai, vt_swap), sign);
        vst1q_f64(pa + 2 * i, res);
    }
}

void weighted_moments(const cdouble* a, const double* w, std::size_t n,
                      double& m1, double& m2) {
    const double* pa = reinterpret_cast<const double*>(a);
    double acc1 = 0.0, acc2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t x = vld1q_f64(pa + 2 * i);
        const double p = vaddvq_f64(vmulq_f64(x, x));
        acc1 += w[i] * p;
        acc2 += w[i] * w[i] * p;
    }
    m1 = acc1;
    m2 = acc2;
}

}  // namespace spingeo::kernels::neon_impl

#endif  // aarch64
