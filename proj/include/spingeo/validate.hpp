// The oracle-equivalence battery behind the `validate` CLI subcommand: every
// closed form checked against its independent route (finite differences,
// quadrature, brute-force state algebra) at pinned grids and tolerances.
#pragma once

#include <string>
#include <vector>

namespace spingeo::cli {

struct CheckResult {
    std::string name;
    double worst_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;  // optional short note (grid size, fitted constants)
};

struct ValidationOptions {
    // Sensitivity fixture: name a check ("curvature") to perturb its reference
    // constant so the suite must fail there. Empty = no mutation.
    std::string mutate;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

ValidationReport run_validation(const ValidationOptions& options = {});

// One line per check plus a summary; fixed formatting (byte-reproducible).
std::string render_report(const ValidationReport& report);

}  // namespace spingeo::cli
