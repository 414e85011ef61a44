// AVX2/FMA kernel variants. Two complex doubles per 256-bit register; the
// remainder tail falls back to the scalar recurrence. Compiled with
// -mavx2 -mfma for this translation unit only; callers reach it through the
// runtime dispatch table, never directly.
#include "spingeo/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace spingeo::kernels::avx2_impl {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(s, s);
    return _mm_cvtsd_f64(_mm_add_sd(s, swapped));
}

}  // namespace

double sum_abs2(const cdouble* a, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(a);
    const std::size_t n2 = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n2; i += 4) {
        __m256d x = _mm256_loadu_pd(p + i);
        acc = _mm256_fmadd_pd(x, x, acc);
    }
    double out = hsum(acc);
    for (; i < n2; ++i) out += p[i] * p[i];
    return out;
}

cdouble dot_conj(const cdouble* a, const cdouble* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        // lanes [ar*br, ai*bi, ...] -> real part after horizontal sum
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        // lanes [ar*bi, -ai*br, ...] -> imaginary part after horizontal sum
        __m256d vb_swap = _mm256_permute_pd(vb, 0b0101);
        vb_swap = _mm256_xor_pd(vb_swap, conj_mask);
        acc_im = _mm256_fmadd_pd(va, vb_swap, acc_im);
    }
    double re = hsum(acc_re), im = hsum(acc_im);
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

void apply_phase_table(cdouble* a, const std::int32_t* idx, const cdouble* table,
                       std::size_t n) {
    double* pa = reinterpret_cast<double*>(a);
    const double* pt = reinterpret_cast<const double*>(table);
    const __m128i lane_off = _mm_set_epi32(1, 0, 1, 0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        // gather indices [2*i0, 2*i0+1, 2*i1, 2*i1+1]
        __m128i pair = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(idx + i));
        __m128i dup = _mm_shuffle_epi32(pair, _MM_SHUFFLE(1, 1, 0, 0));
        __m128i gidx = _mm_add_epi32(_mm_slli_epi32(dup, 1), lane_off);
        __m256d t = _mm256_i32gather_pd(pt, gidx, 8);
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d a_re = _mm256_movedup_pd(va);              // [ar0, ar0, ar1, ar1]
        __m256d a_im = _mm256_permute_pd(va, 0b1111);      // [ai0, ai0, ai1, ai1]
        __m256d t_swap = _mm256_permute_pd(t, 0b0101);     // [ti0, tr0, ti1, tr1]
        __m256d res = _mm256_fmaddsub_pd(a_re, t, _mm256_mul_pd(a_im, t_swap));
        _mm256_storeu_pd(pa + 2 * i, res);
    }
    for (; i < n; ++i) {
        const cdouble t = table[idx[i]];
        const double ar = a[i].real(), ai = a[i].imag();
        a[i] = {ar * t.real() - ai * t.imag(), ar * t.imag() + ai * t.real()};
    }
}

void weighted_moments(const cdouble* a, const double* w, std::size_t n,
                      double& m1, double& m2) {
    const double* pa = reinterpret_cast<const double*>(a);
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x01 = _mm256_loadu_pd(pa + 2 * i);
        __m256d x23 = _mm256_loadu_pd(pa + 2 * i + 4);
        __m256d sq01 = _mm256_mul_pd(x01, x01);
        __m256d sq23 = _mm256_mul_pd(x23, x23);
        // hadd lane order gives probabilities [p0, p2, p1, p3]
        __m256d prob = _mm256_hadd_pd(sq01, sq23);
        __m256d wv = _mm256_loadu_pd(w + i);
        __m256d wp = _mm256_permute4x64_pd(wv, _MM_SHUFFLE(3, 1, 2, 0));
        acc1 = _mm256_fmadd_pd(wp, prob, acc1);
        acc2 = _mm256_fmadd_pd(_mm256_mul_pd(wp, wp), prob, acc2);
    }
    double out1 = hsum(acc1), out2 = hsum(acc2);
    for (; i < n; ++i) {
        const double p = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
        out1 += w[i] * p;
        out2 += w[i] * w[i] * p;
    }
    m1 = out1;
    m2 = out2;
}

}  // namespace spingeo::kernels::avx2_impl

#endif  // x86_64
