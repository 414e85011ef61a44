// Composite Simpson quadrature with panel-doubling refinement. Deterministic:
// fixed evaluation order, fixed partition, no adaptivity beyond doubling.
#pragma once

#include <cstddef>
#include <functional>

namespace spingeo {

struct QuadratureResult {
    double value = 0.0;
    double last_change = 0.0;  // |I_2n - I_n| at acceptance
    std::size_t panels = 0;
};

// Refines until successive composite-Simpson estimates differ by less than
// abs_tol (or the panel cap is reached), then applies one Richardson step.
QuadratureResult integrate_simpson(const std::function<double(double)>& f,
                                   double a, double b, double abs_tol = 1e-6,
                                   std::size_t initial_panels = 512,
                                   std::size_t max_panels = std::size_t{1} << 22);

}  // namespace spingeo
