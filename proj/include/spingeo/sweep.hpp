// Parameter sweeps and figure-data presets behind the CLI: grid evaluation
// (parallel, gathered in grid order), CSV/JSON rendering with fixed 17
// significant-digit formatting, and named-field spec validation.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spingeo/types.hpp"

namespace spingeo::cli {

enum class Quantity {
    metric,
    curvature,
    euler,
    phase,
    aa_phase,
    speed,
    distance,
    brachistochrone,
    concurrence,
    fig1,
    fig2,
    fig3,
    fig4,
    fig5,
};

const char* quantity_name(Quantity q);
Quantity quantity_from_name(const std::string& name);

enum class OutputFormat { csv, json };

// Inclusive linspace: count >= 1, start <= stop; count == 1 emits start only.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 1;

    std::vector<double> points() const;
};

struct SweepSpec {
    Quantity quantity = Quantity::metric;
    SystemConfig config{2, SpinValue(1), 1.0};
    GridSpec theta{0.5 * pi, 0.5 * pi, 1};
    GridSpec phi{0.0, 0.0, 1};
    GridSpec xi{0.0, 0.0, 1};
    GridSpec c{0.0, 1.0, 101};      // fraction of C_max for the fig presets
    double epsilon = 1e-3;          // Gauss-Bonnet cap exclusion
    double xi_prime_max = 1e-3;     // horizon constant for the fig presets
    bool unwrap = false;            // phase sweeps: continuous-in-xi branches
};

// Invalid fields are reported by name so the CLI can print a usage error.
struct SpecError : std::invalid_argument {
    SpecError(std::string field_, const std::string& message)
        : std::invalid_argument(field_ + ": " + message), field(std::move(field_)) {}
    std::string field;
};

struct SweepRow {
    std::vector<double> values;  // one per header column; NaN only when singular
    bool singular = false;
};

struct SweepResult {
    std::vector<std::string> header;  // value columns; "status" is appended on render
    std::vector<SweepRow> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
};

// Deterministic: identical spec gives identical rows (and byte-identical
// renders) regardless of how many threads evaluate the grid.
SweepResult run_sweep(const SweepSpec& spec);

std::string render_csv(const SweepResult& result);
std::string render_json(const SweepResult& result);
std::string render(const SweepResult& result, OutputFormat format);

// "%.17g": the fixed float format used by both renderers.
std::string format_double(double v);

}  // namespace spingeo::cli
