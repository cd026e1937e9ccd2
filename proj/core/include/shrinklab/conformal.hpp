#pragma once

namespace shrinklab {

/// Closed-form geometry of the conformal metric exp(-|x|^2/(2n)) delta_ij on
/// R^(n+1), under which shrinkers are minimal hypersurfaces.
struct ConformalReport {
    int n = 2;                         // hypersurface dimension, >= 2
    double sign_change_radius = 0.0;   // scalar curvature changes sign here
    double distance_to_infinity = 0.0; // integral of exp(-t^2/4n) over [0, inf)

    double scalar_curvature_at(double abs_x) const;
};

/// Scalar curvature of the conformal metric at radius |x|:
///   exp(|x|^2/(2n)) * (n+1 - (n-1)|x|^2/(4n)).
/// Positive for small |x|, negative beyond sqrt(4n(n+1)/(n-1)), and unbounded
/// below at infinity, which sits at finite distance sqrt(n pi).
double conformal_scalar_curvature(int n, double abs_x);

/// Throws DimensionError for n < 2 (the curvature identity needs n >= 2).
/// The distance to infinity is evaluated by quadrature, not the closed form.
ConformalReport conformal_report(int n);

}  // namespace shrinklab
