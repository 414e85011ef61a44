// Array kernels behind the dense state-vector layer: scalar reference
// implementations plus SIMD variants (AVX2 on x86-64, NEON on aarch64)
// selected at runtime. Every backend computes with a fixed block order, so
// results are bit-reproducible run to run within one backend; backends agree
// with the scalar reference to floating-point reassociation tolerance and the
// test suite pins that equivalence.
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>

namespace spingeo::kernels {

using cdouble = std::complex<double>;

enum class Backend { scalar, avx2, neon };

struct KernelTable {
    // sum_i |a_i|^2
    double (*sum_abs2)(const cdouble* a, std::size_t n);
    // sum_i conj(a_i) * b_i
    cdouble (*dot_conj)(const cdouble* a, const cdouble* b, std::size_t n);
    // a_i *= table[idx_i]  (diagonal unitary via a shared phase table)
    void (*apply_phase_table)(cdouble* a, const std::int32_t* idx,
                              const cdouble* table, std::size_t n);
    // m1 = sum_i w_i |a_i|^2,  m2 = sum_i w_i^2 |a_i|^2
    void (*weighted_moments)(const cdouble* a, const double* w, std::size_t n,
                             double& m1, double& m2);
};

bool supported(Backend b);
const char* backend_name(Backend b);
const KernelTable& table(Backend b);   // throws std::invalid_argument if unsupported

Backend active();                      // auto-detected at first use
void set_backend(Backend b);           // override, mainly for tests/benchmarks

// Convenience wrappers over the active backend.
double sum_abs2(std::span<const cdouble> a);
cdouble dot_conj(std::span<const cdouble> a, std::span<const cdouble> b);
void apply_phase_table(std::span<cdouble> a, std::span<const std::int32_t> idx,
                       std::span<const cdouble> table);
void weighted_moments(std::span<const cdouble> a, std::span<const double> w,
                      double& m1, double& m2);

}  // namespace spingeo::kernels
