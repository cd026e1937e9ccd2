#pragma once

#include <functional>

namespace shrinklab {

/// Composite 8-point Gauss-Legendre quadrature of f over [a, b] with
/// `panels` equal subintervals. Deterministic summation order.
double integrate(const std::function<double(double)>& f, double a, double b, int panels = 64);

/// Integral of f over [a, infinity) for integrands dominated by
/// exp(-t^2/scale): truncates where the bound drops below 1e-18.
double integrate_gaussian_tail(const std::function<double(double)>& f, double a, double scale);

}  // namespace shrinklab
