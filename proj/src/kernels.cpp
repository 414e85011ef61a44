// Runtime backend selection for the array kernels.
#include "spingeo/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace spingeo::kernels {

namespace scalar_impl {
double sum_abs2(const cdouble*, std::size_t);
cdouble dot_conj(const cdouble*, const cdouble*, std::size_t);
void apply_phase_table(cdouble*, const std::int32_t*, const cdouble*, std::size_t);
void weighted_moments(const cdouble*, const double*, std::size_t, double&, double&);
}  // namespace scalar_impl

#if defined(SPINGEO_HAVE_AVX2)
namespace avx2_impl {
double sum_abs2(const cdouble*, std::size_t);
cdouble dot_conj(const cdouble*, const cdouble*, std::size_t);
void apply_phase_table(cdouble*, const std::int32_t*, const cdouble*, std::size_t);
void weighted_moments(const cdouble*, const double*, std::size_t, double&, double&);
}  // namespace avx2_impl
#endif

#if defined(SPINGEO_HAVE_NEON)
namespace neon_impl {
double sum_abs2(const cdouble*, std::size_t);
cdouble dot_conj(const cdouble*, const cdouble*, std::size_t);
void apply_phase_table(cdouble*, const std::int32_t*, const cdouble*, std::size_t);
void weighted_moments(const cdouble*, const double*, std::size_t, double&, double&);
}  // namespace neon_impl
#endif

namespace {

const KernelTable scalar_table = {
    scalar_impl::sum_abs2, scalar_impl::dot_conj,
    scalar_impl::apply_phase_table, scalar_impl::weighted_moments};

#if defined(SPINGEO_HAVE_AVX2)
const KernelTable avx2_table = {
    avx2_impl::sum_abs2, avx2_impl::dot_conj,
    avx2_impl::apply_phase_table, avx2_impl::weighted_moments};
#endif

#if defined(SPINGEO_HAVE_NEON)
const KernelTable neon_table = {
    neon_impl::sum_abs2, neon_impl::dot_conj,
    neon_impl::apply_phase_table, neon_impl::weighted_moments};
#endif

Backend detect() {
#if defined(SPINGEO_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return Backend::avx2;
#endif
#if defined(SPINGEO_HAVE_NEON)
    return Backend::neon;
#endif
    return Backend::scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{detect()};
    return b;
}

}  // namespace

bool supported(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(SPINGEO_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::neon:
#if defined(SPINGEO_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "unknown";
}

const KernelTable& table(Backend b) {
    switch (b) {
        case Backend::scalar:
            return scalar_table;
        case Backend::avx2:
#if defined(SPINGEO_HAVE_AVX2)
            if (supported(Backend::avx2)) return avx2_table;
#endif
            break;
        case Backend::neon:
#if defined(SPINGEO_HAVE_NEON)
            return neon_table;
#else
            break;
#endif
    }
    throw std::invalid_argument(std::string("kernel backend not supported here: ") +
                                backend_name(b));
}

Backend active() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    table(b);  // validate
    current().store(b, std::memory_order_relaxed);
}

double sum_abs2(std::span<const cdouble> a) {
    return table(active()).sum_abs2(a.data(), a.size());
}

cdouble dot_conj(std::span<const cdouble> a, std::span<const cdouble> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot_conj: length mismatch");
    return table(active()).dot_conj(a.data(), b.data(), a.size());
}

void apply_phase_table(std::span<cdouble> a, std::span<const std::int32_t> idx,
                       std::span<const cdouble> table_entries) {
    if (a.size() != idx.size())
        throw std::invalid_argument("apply_phase_table: length mismatch");
    table(active()).apply_phase_table(a.data(), idx.data(), table_entries.data(),
                                      a.size());
}

void weighted_moments(std::span<const cdouble> a, std::span<const double> w,
                      double& m1, double& m2) {
    if (a.size() != w.size())
        throw std::invalid_argument("weighted_moments: length mismatch");
    table(active()).weighted_moments(a.data(), w.data(), a.size(), m1, m2);
}

}  // namespace spingeo::kernels
