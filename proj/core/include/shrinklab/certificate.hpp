#pragma once

#include <Eigen/Core>
#include <optional>

#include "shrinklab/geometry.hpp"
#include "shrinklab/mesh.hpp"

namespace shrinklab {

enum class CertModel { Plane, Sphere, Cylinder };

/// Ingredients of the stability counterexample u = eta * v, where
/// v(x) = <n(p), n(x)> and eta is 1 on B_R, ramps linearly to 0 on
/// B_{R+1} \ B_R. The reported bound
///   bound = tail_term - core_term
/// dominates the quadratic form of u, and turns negative for large R on every
/// complete shrinker with polynomial area growth.
struct CertificateReport {
    double R = 0.0;
    double tail_term = 0.0;  // integral of v^2 exp(-|x|^2/4) outside B_R
    double core_term = 0.0;  // half the integral of v^2 exp(-|x|^2/4) inside B_R
    double bound = 0.0;      // tail_term - core_term
    double form_value = 0.0; // exact quadratic form of u = eta v
};

/// Closed-form / 1-D quadrature evaluation on the three model shrinkers. The
/// base point p sits nearest the origin (any choice works; this is the
/// default). R > 0.
CertificateReport instability_certificate(CertModel model, double R);

/// Discrete evaluation on an arbitrary mesh via surface integration. The base
/// point defaults to the vertex closest to the origin.
CertificateReport instability_certificate(const TriMesh& mesh, const SurfaceGeometry& geom,
                                          double R,
                                          std::optional<Eigen::Index> base_vertex = {});

/// Smallest radius in [lo, hi] where the bound changes sign, located by
/// bisection to within tol_R. Throws BracketError when the sign is constant.
double certificate_threshold_radius(CertModel model, double lo, double hi, double tol_R = 1e-6);

}  // namespace shrinklab
