#include "spingeo/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "spingeo/concurrence.hpp"
#include "spingeo/dynamics.hpp"
#include "spingeo/geometry.hpp"
#include "spingeo/kernels.hpp"
#include "spingeo/phases.hpp"
#include "spingeo/version.hpp"

namespace spingeo::cli {

namespace {

constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();

struct QuantityInfo {
    Quantity q;
    const char* name;
};

constexpr QuantityInfo quantity_infos[] = {
    {Quantity::metric, "metric"},
    {Quantity::curvature, "curvature"},
    {Quantity::euler, "euler"},
    {Quantity::phase, "phase"},
    {Quantity::aa_phase, "aa_phase"},
    {Quantity::speed, "speed"},
    {Quantity::distance, "distance"},
    {Quantity::brachistochrone, "brachistochrone"},
    {Quantity::concurrence, "concurrence"},
    {Quantity::fig1, "fig1"},
    {Quantity::fig2, "fig2"},
    {Quantity::fig3, "fig3"},
    {Quantity::fig4, "fig4"},
    {Quantity::fig5, "fig5"},
};

bool is_fig(Quantity q) {
    return q == Quantity::fig1 || q == Quantity::fig2 || q == Quantity::fig3 ||
           q == Quantity::fig4 || q == Quantity::fig5;
}

bool needs_interaction(Quantity q) {
    switch (q) {
        case Quantity::curvature:
        case Quantity::euler:
        case Quantity::speed:
        case Quantity::distance:
        case Quantity::brachistochrone:
            return true;
        default:
            return false;
    }
}

void validate_grid(const GridSpec& g, const char* field) {
    if (g.count < 1) throw SpecError(field, "grid count must be >= 1");
    if (g.count > (std::size_t{1} << 24))
        throw SpecError(field, "grid count exceeds 2^24 points");
    if (!std::isfinite(g.start) || !std::isfinite(g.stop))
        throw SpecError(field, "grid endpoints must be finite");
    if (g.start > g.stop) throw SpecError(field, "grid start must be <= stop");
}

void validate_spec(const SweepSpec& spec) {
    validate_grid(spec.theta, "theta");
    validate_grid(spec.phi, "phi");
    validate_grid(spec.xi, "xi");
    validate_grid(spec.c, "c");
    if (spec.theta.start < 0.0 || spec.theta.stop > pi)
        throw SpecError("theta", "grid must lie inside [0, pi]");
    if (needs_interaction(spec.quantity) && spec.config.n_spins < 2)
        throw SpecError("config.n_spins",
                        std::string("quantity '") + quantity_name(spec.quantity) +
                            "' needs at least two spins");
    if (spec.quantity == Quantity::euler) {
        if (!(spec.xi.start > 0.0))
            throw SpecError("xi", "euler sweeps xi_max, which must be positive");
        if (!(spec.epsilon > 0.0 && spec.epsilon < pi / 4.0))
            throw SpecError("epsilon", "must lie in (0, pi/4)");
    }
    if (spec.quantity == Quantity::brachistochrone && !(spec.xi.start > 0.0))
        throw SpecError("xi", "brachistochrone needs xi > 0");
    if ((spec.quantity == Quantity::speed ||
         spec.quantity == Quantity::brachistochrone) &&
        !(spec.config.coupling > 0.0))
        throw SpecError("config.coupling", "must be positive for this quantity");
    if (is_fig(spec.quantity)) {
        if (!(spec.xi_prime_max > 0.0))
            throw SpecError("xi_prime_max", "must be positive");
        if (spec.c.start < 0.0 || spec.c.stop > 1.0)
            throw SpecError("c", "fig presets sweep C/C_max, which must lie in [0, 1]");
    }
    if (spec.quantity == Quantity::concurrence && spec.config.n_spins != 2)
        throw SpecError("config.n_spins", "concurrence is defined for exactly two spins");
}

using RowFn = std::function<SweepRow(std::size_t)>;

// Evaluate rows in parallel; each worker writes only its own slots, so the
// gathered result is identical to serial evaluation.
std::vector<SweepRow> evaluate_rows(std::size_t count, const RowFn& fn) {
    std::vector<SweepRow> rows(count);
    unsigned workers = std::min<std::size_t>(
        count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1 || count < 16) {
        for (std::size_t i = 0; i < count; ++i) rows[i] = fn(i);
        return rows;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < count; i += workers) rows[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

// A domain_error at one grid point marks the row singular instead of aborting
// the sweep; the value cells carry NaN and the status column says so.
SweepRow guarded(std::size_t n_values, const std::function<void(SweepRow&)>& fill) {
    SweepRow row;
    row.values.assign(n_values, quiet_nan);
    try {
        fill(row);
    } catch (const std::domain_error&) {
        row.singular = true;
    }
    return row;
}

void push_meta(SweepResult& r, const std::string& k, const std::string& v) {
    r.metadata.emplace_back(k, v);
}

std::string grid_text(const GridSpec& g) {
    return format_double(g.start) + ":" + format_double(g.stop) + ":" +
           std::to_string(g.count);
}

void common_metadata(SweepResult& r, const SweepSpec& spec) {
    push_meta(r, "tool", "spingeo");
    push_meta(r, "version", version_string());
    push_meta(r, "quantity", quantity_name(spec.quantity));
    push_meta(r, "n_spins", std::to_string(spec.config.n_spins));
    push_meta(r, "twice_spin", std::to_string(spec.config.spin.twice_spin));
    push_meta(r, "coupling", format_double(spec.config.coupling));
    push_meta(r, "kernel_backend", kernels::backend_name(kernels::active()));
}

SweepResult sweep_metric(const SweepSpec& spec) {
    SweepResult r;
    r.header = {"theta", "phi", "xi", "g_tt", "g_pp", "g_xx", "g_px"};
    const auto thetas = spec.theta.points();
    const auto phis = spec.phi.points();
    const auto xis = spec.xi.points();
    const std::size_t count = thetas.size() * phis.size() * xis.size();
    r.rows = evaluate_rows(count, [&](std::size_t i) {
        const std::size_t it = i / (phis.size() * xis.size());
        const std::size_t ip = (i / xis.size()) % phis.size();
        const std::size_t ix = i % xis.size();
        return guarded(7, [&](SweepRow& row) {
            const ParamPoint p(thetas[it], phis[ip], xis[ix]);
            const geometry::MetricTensor3 g = geometry::metric_closed_form(spec.config, p);
            row.values = {p.theta, p.phi, p.xi, g.g_tt, g.g_pp, g.g_xx, g.g_px};
        });
    });
    return r;
}

SweepResult sweep_curvature(const SweepSpec& spec) {
    SweepResult r;
    r.header = {"theta", "k"};
    const auto thetas = spec.theta.points();
    r.rows = evaluate_rows(thetas.size(), [&](std::size_t i) {
        return guarded(2, [&](SweepRow& row) {
            row.values[0] = thetas[i];
            row.values[1] = geometry::gaussian_curvature(spec.config, thetas[i]);
        });
    });
    return r;
}

SweepResult sweep_euler(const SweepSpec& spec) {
    SweepResult r;
    r.header = {"xi_max", "epsilon", "bulk", "defect", "chi"};
    const auto xi_maxes = spec.xi.points();
    r.rows = evaluate_rows(xi_maxes.size(), [&](std::size_t i) {
        return guarded(5, [&](SweepRow& row) {
            const geometry::TopologyReport t =
                geometry::euler_characteristic(spec.config, xi_maxes[i], spec.epsilon);
            row.values = {xi_maxes[i], spec.epsilon, t.bulk_integral, t.defect_sum,
                          t.euler_characteristic};
        });
    });
    return r;
}

SweepResult sweep_phase(const SweepSpec& spec) {
    SweepResult r;
    r.header = {"theta", "phi", "xi", "global", "dynamical", "geometric"};
    const auto thetas = spec.theta.points();
    const auto phis = spec.phi.points();
    const auto xis = spec.xi.points();
    const std::size_t count = thetas.size() * phis.size() * xis.size();
    r.rows = evaluate_rows(count, [&](std::size_t i) {
        const std::size_t it = i / (phis.size() * xis.size());
        const std::size_t ip = (i / xis.size()) % phis.size();
        const std::size_t ix = i % xis.size();
        return guarded(6, [&](SweepRow& row) {
            const ParamPoint p(thetas[it], phis[ip], xis[ix]);
            row.values[0] = p.theta;
            row.values[1] = p.phi;
            row.values[2] = p.xi;
            const phases::PhaseBreakdown b = phases::geometric_phase(spec.config, p);
            row.values[3] = b.global_phase;
            row.values[4] = b.dynamical_phase;
            row.values[5] = b.geometric_phase;
        });
    });
    if (spec.unwrap) {
        // nearest-branch continuation along xi within each (theta, phi) block;
        // blocks containing a singular row are left wrapped
        for (std::size_t block = 0; block + xis.size() <= r.rows.size();
             block += xis.size()) {
            bool clean = true;
            for (std::size_t k = 0; k < xis.size(); ++k)
                clean = clean && !r.rows[block + k].singular;
            if (!clean) continue;
            for (std::size_t col : {std::size_t{3}, std::size_t{5}}) {
                std::vector<double> wrapped(xis.size());
                for (std::size_t k = 0; k < xis.size(); ++k)
                    wrapped[k] = r.rows[block + k].values[col];
                const std::vector<double> flat = phases::unwrap_nearest_branch(wrapped);
                for (std::size_t k = 0; k < xis.size(); ++k)
                    r.rows[block + k].values[col] = flat[k];
            }
        }
    }
    return r;
}

SweepResult sweep_aa_phase(const SweepSpec& spec) {
    SweepResult r;
    r.header = {"theta", "xi_max", "aa", "cyclic"};
    const auto thetas = spec.theta.points();
    const auto xis = spec.xi.points();
    r.rows = evaluate_rows(thetas.size() * xis.size(), [&](std::size_t i) {
        const std::size_t it = i / xis.size();
        const std::size_t ix = i % xis.size();
        return guarded(4, [&](SweepRow& row) {
            row.values = {thetas[it], xis[ix],
                          phases::aa_phase(spec.config, thetas[it], xis[ix]),
                          phases::aa_cycle_is_closed(spec.config, xis[ix]) ? 1.0 : 0.0};
        });
    });
    return r;
}

SweepResult sweep_speed(const SweepSpec& spec) {
    SweepResult r;
    r.header = {"theta", "v"};
    const auto thetas = spec.theta.points();
    r.rows = evaluate_rows(thetas.size(), [&](std::size_t i) {
        return guarded(2, [&](SweepRow& row) {
            row.values = {thetas[i], dynamics::speed(spec.config, thetas[i])};
        });
    });
    return r;
}

SweepResult sweep_distance(const SweepSpec& spec) {
    SweepResult r;
    r.header = {"theta", "xi", "s"};
    const auto thetas = spec.theta.points();
    const auto xis = spec.xi.points();
    r.rows = evaluate_rows(thetas.size() * xis.size(), [&](std::size_t i) {
        const std::size_t it = i / xis.size();
        const std::size_t ix = i % xis.size();
        return guarded(3, [&](SweepRow& row) {
            row.values = {thetas[it], xis[ix],
                          dynamics::geodesic_distance(spec.config, thetas[it], xis[ix])};
        });
    });
    return r;
}

SweepResult sweep_brachistochrone(const SweepSpec& spec) {
    SweepResult r;
    r.header = {"xi", "theta_max", "v_max", "s_min", "tau", "ratio"};
    const auto xis = spec.xi.points();
    r.rows = evaluate_rows(xis.size(), [&](std::size_t i) {
        return guarded(6, [&](SweepRow& row) {
            const dynamics::BrachistochroneSolution b =
                dynamics::brachistochrone(spec.config, xis[i]);
            row.values = {xis[i], b.theta_max, b.v_max, b.s_min, b.tau,
                          b.ratio_tau_over_t};
        });
    });
    return r;
}

SweepResult sweep_concurrence(const SweepSpec& spec) {
    SweepResult r;
    r.header = {"theta", "phi", "xi", "c_exact", "c_short"};
    const auto thetas = spec.theta.points();
    const auto phis = spec.phi.points();
    const auto xis = spec.xi.points();
    const std::size_t count = thetas.size() * phis.size() * xis.size();
    r.rows = evaluate_rows(count, [&](std::size_t i) {
        const std::size_t it = i / (phis.size() * xis.size());
        const std::size_t ip = (i / xis.size()) % phis.size();
        const std::size_t ix = i % xis.size();
        return guarded(5, [&](SweepRow& row) {
            row.values = {
                thetas[it], phis[ip], xis[ix],
                entanglement::iconcurrence_exact(spec.config.spin, thetas[it],
                                                 phis[ip], xis[ix]),
                entanglement::iconcurrence_short_time(spec.config.spin, thetas[it],
                                                      xis[ix])};
        });
    });
    return r;
}

// Figure presets: tilde_xi = 1 (xi = xi_prime_max), J = 1 for the dynamical
// ones, sweeping C in [0, C_max] for s in {1/2, 1, 3/2, 2}.
SweepResult sweep_fig(const SweepSpec& spec) {
    SweepResult r;
    const char* value_col = nullptr;
    switch (spec.quantity) {
        case Quantity::fig1: value_col = "k"; break;
        case Quantity::fig2: value_col = "phase"; break;
        case Quantity::fig3: value_col = "v"; break;
        case Quantity::fig4: value_col = "s"; break;
        default: value_col = "tau"; break;
    }
    r.header = {"twice_spin", "c", "c_over_cmax", value_col};

    const int spins[] = {1, 2, 3, 4};
    const auto fractions = spec.c.points();
    const double xpm = spec.xi_prime_max;
    const std::size_t count = 4 * fractions.size();
    r.rows = evaluate_rows(count, [&](std::size_t i) {
        const SpinValue spin(spins[i / fractions.size()]);
        const double frac = fractions[i % fractions.size()];
        return guarded(4, [&](SweepRow& row) {
            const double cmax = 2.0 * spin.s() * xpm;
            const entanglement::ConcurrenceContext ctx(spin, xpm, xpm, frac * cmax);
            row.values[0] = spin.twice_spin;
            row.values[1] = ctx.c;
            row.values[2] = frac;
            switch (spec.quantity) {
                case Quantity::fig1:
                    row.values[3] = entanglement::curvature_from_concurrence(ctx);
                    break;
                case Quantity::fig2:
                    row.values[3] = entanglement::phase_from_concurrence(ctx);
                    break;
                case Quantity::fig3:
                    row.values[3] = entanglement::speed_from_concurrence(ctx, 1.0);
                    break;
                case Quantity::fig4:
                    row.values[3] =
                        entanglement::distance_and_time_from_concurrence(ctx, 1.0)
                            .distance;
                    break;
                default:
                    row.values[3] =
                        entanglement::distance_and_time_from_concurrence(ctx, 1.0)
                            .optimal_time;
                    break;
            }
        });
    });
    return r;
}

}  // namespace

const char* quantity_name(Quantity q) {
    for (const QuantityInfo& info : quantity_infos)
        if (info.q == q) return info.name;
    return "unknown";
}

Quantity quantity_from_name(const std::string& name) {
    for (const QuantityInfo& info : quantity_infos)
        if (name == info.name) return info.q;
    throw SpecError("quantity", "unknown quantity '" + name + "'");
}

std::vector<double> GridSpec::points() const {
    std::vector<double> out;
    out.reserve(count);
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    const double span = stop - start;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(start + span * static_cast<double>(i) /
                                  static_cast<double>(count - 1));
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SweepResult run_sweep(const SweepSpec& spec) {
    validate_spec(spec);
    SweepResult r;
    switch (spec.quantity) {
        case Quantity::metric: r = sweep_metric(spec); break;
        case Quantity::curvature: r = sweep_curvature(spec); break;
        case Quantity::euler: r = sweep_euler(spec); break;
        case Quantity::phase: r = sweep_phase(spec); break;
        case Quantity::aa_phase: r = sweep_aa_phase(spec); break;
        case Quantity::speed: r = sweep_speed(spec); break;
        case Quantity::distance: r = sweep_distance(spec); break;
        case Quantity::brachistochrone: r = sweep_brachistochrone(spec); break;
        case Quantity::concurrence: r = sweep_concurrence(spec); break;
        default: r = sweep_fig(spec); break;
    }

    SweepResult with_meta;
    with_meta.header = std::move(r.header);
    with_meta.rows = std::move(r.rows);
    common_metadata(with_meta, spec);
    push_meta(with_meta, "theta_grid", grid_text(spec.theta));
    push_meta(with_meta, "phi_grid", grid_text(spec.phi));
    push_meta(with_meta, "xi_grid", grid_text(spec.xi));
    if (is_fig(spec.quantity)) {
        push_meta(with_meta, "c_fraction_grid", grid_text(spec.c));
        push_meta(with_meta, "xi_prime_max", format_double(spec.xi_prime_max));
        push_meta(with_meta, "tilde_xi", "1");
        if (spec.quantity != Quantity::fig1 && spec.quantity != Quantity::fig2)
            push_meta(with_meta, "preset_coupling", "1");
        push_meta(with_meta, "preset_spins", "1/2,1,3/2,2");
    }
    if (spec.quantity == Quantity::euler) {
        push_meta(with_meta, "epsilon", format_double(spec.epsilon));
        push_meta(with_meta, "quadrature_tol", "1e-06");
    }
    if (spec.quantity == Quantity::phase)
        push_meta(with_meta, "unwrap", spec.unwrap ? "1" : "0");
    return with_meta;
}

std::string render_csv(const SweepResult& result) {
    std::string out;
    for (const auto& [k, v] : result.metadata)
        out += "# " + k + ": " + v + "\n";
    for (std::size_t i = 0; i < result.header.size(); ++i) {
        out += result.header[i];
        out += ",";
    }
    out += "status\n";
    for (const SweepRow& row : result.rows) {
        for (double v : row.values) {
            out += format_double(v);
            out += ",";
        }
        out += row.singular ? "singular" : "ok";
        out += "\n";
    }
    return out;
}

std::string render_json(const SweepResult& result) {
    auto escape = [](const std::string& s) {
        std::string out;
        for (char ch : s) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        return out;
    };
    std::string out = "{\n  \"metadata\": {";
    bool first = true;
    for (const auto& [k, v] : result.metadata) {
        out += first ? "\n" : ",\n";
        out += "    \"" + escape(k) + "\": \"" + escape(v) + "\"";
        first = false;
    }
    out += "\n  },\n  \"rows\": [";
    first = true;
    for (const SweepRow& row : result.rows) {
        out += first ? "\n" : ",\n";
        out += "    {";
        for (std::size_t i = 0; i < result.header.size(); ++i) {
            if (i) out += ", ";
            out += "\"" + escape(result.header[i]) + "\": ";
            out += std::isnan(row.values[i]) ? "null" : format_double(row.values[i]);
        }
        if (!result.header.empty()) out += ", ";
        out += std::string("\"status\": \"") + (row.singular ? "singular" : "ok") + "\"";
        out += "}";
        first = false;
    }
    out += "\n  ]\n}\n";
    return out;
}

std::string render(const SweepResult& result, OutputFormat format) {
    return format == OutputFormat::csv ? render_csv(result) : render_json(result);
}

}  // namespace spingeo::cli
