#include "spingeo/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "spingeo/kernels.hpp"

namespace spingeo {

namespace {

// Exact for n <= 56 (the running product stays below 2^53); larger spins fall
// back to lgamma with ~1e-13 relative accuracy.
double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    if (n <= 56) {
        double acc = 1.0;
        for (int i = 1; i <= k; ++i)
            acc = acc * static_cast<double>(n - k + i) / static_cast<double>(i);
        return std::round(acc);
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(n - k + 1.0));
}

// Walks the multi-index odometer (most significant digit = spin 1), keeping
// the running sums M = sum twice_m and S2 = sum twice_m^2 so that each basis
// state costs O(1) amortized.
template <typename F>
void for_each_basis_state(const SystemConfig& config, F&& f) {
    const std::size_t dim = config.dim();
    const int n = config.n_spins;
    const int t = config.spin.twice_spin;
    const int d = config.spin.dim();

    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    std::int64_t m_sum = static_cast<std::int64_t>(n) * (-t);
    std::int64_t m2_sum = static_cast<std::int64_t>(n) * t * t;

    for (std::size_t i = 0; i < dim; ++i) {
        f(i, m_sum, m2_sum);
        // increment least significant digit (spin N) with carries
        for (int k = n - 1; k >= 0; --k) {
            const int tm_old = 2 * digit[k] - t;
            if (digit[k] + 1 < d) {
                ++digit[k];
                const int tm_new = tm_old + 2;
                m_sum += 2;
                m2_sum += static_cast<std::int64_t>(tm_new) * tm_new -
                          static_cast<std::int64_t>(tm_old) * tm_old;
                break;
            }
            digit[k] = 0;
            m_sum -= t + tm_old;
            m2_sum += static_cast<std::int64_t>(t) * t -
                      static_cast<std::int64_t>(tm_old) * tm_old;
        }
    }
}

}  // namespace

CMatrix matmul(const CMatrix& x, const CMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("matmul: size mismatch");
    CMatrix out(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const cdouble xik = x.at(i, k);
            if (xik == cdouble{0.0, 0.0}) continue;
            for (int j = 0; j < x.n; ++j) out.at(i, j) += xik * y.at(k, j);
        }
    return out;
}

CMatrix matsub(const CMatrix& x, const CMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("matsub: size mismatch");
    CMatrix out(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
    return out;
}

double frobenius_norm(const CMatrix& x) {
    return std::sqrt(kernels::sum_abs2(x.a));
}

SpinOperators build_spin_operators(SpinValue spin) {
    const int d = spin.dim();
    const double s = spin.s();
    CMatrix sp(d), sm(d), sz(d);
    for (int j = 0; j < d; ++j) {
        const double m = spin.m(j);
        sz.at(j, j) = m;
        if (j + 1 < d) {
            // S+ |s,m> = sqrt(s(s+1) - m(m+1)) |s,m+1>
            const double c = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
            sp.at(j + 1, j) = c;
            sm.at(j, j + 1) = c;
        }
    }
    SpinOperators ops{CMatrix(d), CMatrix(d), std::move(sz)};
    for (std::size_t i = 0; i < ops.sx.a.size(); ++i) {
        ops.sx.a[i] = 0.5 * (sp.a[i] + sm.a[i]);
        ops.sy.a[i] = cdouble{0.0, -0.5} * (sp.a[i] - sm.a[i]);
    }
    return ops;
}

double PureState::norm() const { return std::sqrt(kernels::sum_abs2(amplitudes)); }

PureState build_initial_state(const SystemConfig& config, double theta, double phi) {
    if (!(theta >= 0.0 && theta <= pi))
        throw std::invalid_argument("build_initial_state: theta must be in [0, pi]");
    const std::size_t dim = config.dim();  // enforces the dimension cap
    const int d = config.spin.dim();
    const int ts = config.spin.twice_spin;

    double ch = std::cos(0.5 * theta);
    double sh = std::sin(0.5 * theta);
    if (theta == pi) { ch = 0.0; sh = 1.0; }  // Z diverges; antipodal product state

    // single-site amplitudes a_j = sqrt(binom(2s,j)) ch^(2s-j) sh^j e^{-i j Phi}
    std::vector<cdouble> site(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const double mag = std::sqrt(binomial(ts, j)) *
                           std::pow(ch, ts - j) * std::pow(sh, j);
        site[static_cast<std::size_t>(j)] =
            mag * cdouble{std::cos(j * phi), -std::sin(j * phi)};
    }

    PureState state{config, std::vector<cdouble>{}};
    state.amplitudes.assign(1, cdouble{1.0, 0.0});
    std::vector<cdouble> next;
    for (int k = 0; k < config.n_spins; ++k) {
        next.assign(state.amplitudes.size() * static_cast<std::size_t>(d),
                    cdouble{0.0, 0.0});
        std::size_t out = 0;
        for (const cdouble& left : state.amplitudes)
            for (int j = 0; j < d; ++j) next[out++] = left * site[j];
        state.amplitudes.swap(next);
    }
    if (state.amplitudes.size() != dim)
        throw std::logic_error("build_initial_state: dimension bookkeeping");
    return state;
}

std::vector<std::int64_t> pair_sums(const SystemConfig& config) {
    std::vector<std::int64_t> q(config.dim());
    for_each_basis_state(config, [&](std::size_t i, std::int64_t m, std::int64_t m2) {
        q[i] = (m * m - m2) / 2;
    });
    return q;
}

PureState evolve(const PureState& initial, double xi) {
    const std::vector<std::int64_t> q = pair_sums(initial.config);
    std::int64_t qmin = 0, qmax = 0;
    for (std::int64_t v : q) {
        qmin = std::min(qmin, v);
        qmax = std::max(qmax, v);
    }
    const std::size_t range = static_cast<std::size_t>(qmax - qmin) + 1;
    std::vector<cdouble> table(range);
    for (std::size_t k = 0; k < range; ++k) {
        const double angle = -0.5 * xi * static_cast<double>(qmin + static_cast<std::int64_t>(k));
        table[k] = {std::cos(angle), std::sin(angle)};
    }
    std::vector<std::int32_t> idx(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        idx[i] = static_cast<std::int32_t>(q[i] - qmin);

    PureState out = initial;
    kernels::apply_phase_table(out.amplitudes, idx, table);
    return out;
}

cdouble overlap(const PureState& a, const PureState& b) {
    if (!a.config.same_space(b.config))
        throw std::invalid_argument("overlap: states live in different Hilbert spaces");
    return kernels::dot_conj(a.amplitudes, b.amplitudes);
}

double HamiltonianMoments::uncertainty() const {
    return std::sqrt(std::max(variance, 0.0));
}

HamiltonianMoments hamiltonian_moments(const PureState& state) {
    const std::vector<std::int64_t> q = pair_sums(state.config);
    std::vector<double> energy(q.size());
    const double j = state.config.coupling;
    for (std::size_t i = 0; i < q.size(); ++i)
        energy[i] = 0.5 * j * static_cast<double>(q[i]);
    double mean = 0.0, raw2 = 0.0;
    kernels::weighted_moments(state.amplitudes, energy, mean, raw2);
    // shifted second pass: <(H - <H>)^2> avoids the <H^2> - <H>^2 cancellation
    // (which would put sqrt(ulp)-level noise into the uncertainty near
    // eigenstates)
    for (double& e : energy) e -= mean;
    double residual = 0.0, variance = 0.0;
    kernels::weighted_moments(state.amplitudes, energy, residual, variance);
    return {mean, variance - residual * residual};
}

cdouble DensityMatrix::trace() const {
    cdouble tr{0.0, 0.0};
    for (int i = 0; i < dim; ++i) tr += entries.at(i, i);
    return tr;
}

double DensityMatrix::max_hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j <= i; ++j)
            worst = std::max(worst,
                             std::abs(entries.at(i, j) - std::conj(entries.at(j, i))));
    return worst;
}

DensityMatrix partial_trace(const PureState& state, int keep) {
    const int n = state.config.n_spins;
    if (n < 2)
        throw std::invalid_argument("partial_trace: need at least two spins");
    if (keep < 1 || keep > n)
        throw std::invalid_argument("partial_trace: keep index out of range");

    const std::size_t d = static_cast<std::size_t>(state.config.spin.dim());
    std::size_t right = 1;
    for (int k = keep; k < n; ++k) right *= d;
    std::size_t left = state.amplitudes.size() / (right * d);

    DensityMatrix rho{static_cast<int>(d), CMatrix(static_cast<int>(d))};
    const cdouble* amps = state.amplitudes.data();
    for (std::size_t l = 0; l < left; ++l)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t jp = 0; jp < d; ++jp) {
                const cdouble* row = amps + (l * d + j) * right;
                const cdouble* rowp = amps + (l * d + jp) * right;
                // sum_r A[l,j,r] conj(A[l,j',r])
                rho.entries.at(static_cast<int>(j), static_cast<int>(jp)) +=
                    kernels::table(kernels::active()).dot_conj(rowp, row, right);
            }
    return rho;
}

double purity(const DensityMatrix& rho) {
    // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho
    return kernels::sum_abs2(rho.entries.a);
}

double evolution_ray_period(const SystemConfig& config) {
    return config.spin.is_half_integer() ? 2.0 * pi : pi;
}

int evolution_period_sign(const SystemConfig& config) {
    if (!config.spin.is_half_integer()) return 1;
    const std::int64_t pairs =
        static_cast<std::int64_t>(config.n_spins) * (config.n_spins - 1) / 2;
    return pairs % 2 == 0 ? 1 : -1;
}

std::string state_to_json(const PureState& state) {
    nlohmann::json j;
    j["config"] = {{"n_spins", state.config.n_spins},
                   {"twice_spin", state.config.spin.twice_spin},
                   {"coupling", state.config.coupling}};
    j["layout"] = "row-major-ascending-m";
    nlohmann::json amps = nlohmann::json::array();
    for (const cdouble& a : state.amplitudes)
        amps.push_back({a.real(), a.imag()});
    j["amplitudes"] = std::move(amps);
    return j.dump();
}

PureState state_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("layout").get<std::string>() != "row-major-ascending-m")
        throw std::invalid_argument("state_from_json: unknown amplitude layout");
    const auto& c = j.at("config");
    SystemConfig config(c.at("n_spins").get<int>(),
                        SpinValue(c.at("twice_spin").get<int>()),
                        c.at("coupling").get<double>());
    PureState state{config, {}};
    for (const auto& pair : j.at("amplitudes"))
        state.amplitudes.emplace_back(pair.at(0).get<double>(),
                                      pair.at(1).get<double>());
    if (state.amplitudes.size() != config.dim())
        throw std::invalid_argument("state_from_json: amplitude count != d^N");
    const double nrm = state.norm();
    if (std::abs(nrm - 1.0) > 1e-10)
        throw std::invalid_argument("state_from_json: state is not normalized");
    return state;
}

}  // namespace spingeo
