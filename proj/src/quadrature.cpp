#include "spingeo/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace spingeo {

namespace {

double simpson(const std::function<double(double)>& f, double a, double b,
               std::size_t panels) {
    const double h = (b - a) / static_cast<double>(panels);
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < panels; i += 2)
        odd += f(a + h * static_cast<double>(i));
    for (std::size_t i = 2; i < panels; i += 2)
        even += f(a + h * static_cast<double>(i));
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace

QuadratureResult integrate_simpson(const std::function<double(double)>& f,
                                   double a, double b, double abs_tol,
                                   std::size_t initial_panels,
                                   std::size_t max_panels) {
    if (!(b >= a)) throw std::invalid_argument("integrate_simpson: b < a");
    if (initial_panels % 2 != 0 || initial_panels == 0)
        throw std::invalid_argument("integrate_simpson: panels must be even");

    std::size_t n = initial_panels;
    double coarse = simpson(f, a, b, n);
    while (true) {
        const std::size_t n2 = 2 * n;
        const double fine = simpson(f, a, b, n2);
        const double change = std::abs(fine - coarse);
        if (change < abs_tol || n2 >= max_panels) {
            // Richardson extrapolation on the last pair
            return {(16.0 * fine - coarse) / 15.0, change, n2};
        }
        coarse = fine;
        n = n2;
    }
}

}  // namespace spingeo
