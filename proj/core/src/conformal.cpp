#include "shrinklab/conformal.hpp"

#include <cmath>

#include "shrinklab/errors.hpp"
#include "shrinklab/quadrature.hpp"

namespace shrinklab {

double conformal_scalar_curvature(int n, double abs_x) {
    if (n < 2) throw DimensionError("conformal scalar curvature identity requires n >= 2");
    const double x2 = abs_x * abs_x;
    return std::exp(x2 / (2.0 * n)) * (n + 1.0 - (n - 1.0) * x2 / (4.0 * n));
}

double ConformalReport::scalar_curvature_at(double abs_x) const {
    return conformal_scalar_curvature(n, abs_x);
}

ConformalReport conformal_report(int n) {
    if (n < 2) throw DimensionError("conformal report requires n >= 2");
    ConformalReport rep;
    rep.n = n;
    rep.sign_change_radius = std::sqrt(4.0 * n * (n + 1.0) / (n - 1.0));
    rep.distance_to_infinity = integrate_gaussian_tail(
        [n](double t) { return std::exp(-t * t / (4.0 * n)); }, 0.0, 4.0 * n);
    return rep;
}

}  // namespace shrinklab
