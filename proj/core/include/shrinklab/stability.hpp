#pragma once

#include <Eigen/Core>

#include "shrinklab/geometry.hpp"
#include "shrinklab/mesh.hpp"

namespace shrinklab {

/// Value and decomposition of the stability quadratic form
///   Q(u) = - integral of u L u exp(-|x|^2/4) dmu.
/// `value` is the direct evaluation through apply_L; the three terms give the
/// integrated-by-parts route
///   Q(u) = gradient_term - curvature_term - zeroth_term,
/// and the two routes agree up to discretization error.
struct QuadraticFormReport {
    double value = 0.0;           // direct form
    double gradient_term = 0.0;   // integral of |grad u|^2 exp(-|x|^2/4)
    double curvature_term = 0.0;  // integral of |A|^2 u^2 exp(-|x|^2/4)
    double zeroth_term = 0.0;     // half the integral of u^2 exp(-|x|^2/4)

    double symmetric_value() const { return gradient_term - curvature_term - zeroth_term; }
    double route_difference() const { return value - symmetric_value(); }
};

/// Both evaluations of Q(u). Throws SupportError unless u vanishes at and
/// next to the boundary (compact support).
QuadraticFormReport quadratic_form(const TriMesh& mesh, const SurfaceGeometry& geom,
                                   const ScalarField& u);

/// Residual of the translation eigenfunction identity L<v,n> = <v,n>/2 in the
/// max norm over interior vertices. The mesh must pass the shrinker residual
/// threshold (default 0.05); otherwise NotAShrinkerError.
double translation_eigen_check(const TriMesh& mesh, const SurfaceGeometry& geom,
                               const Eigen::Vector3d& v, double residual_threshold = 0.05);

/// Manufactured-solution check of the log substitution w = log u:
///   Delta w = L u / u - |A|^2 + <x, grad w>/2 - 1/2 - |grad w|^2
/// holds for every positive u. Returns the max-norm residual over interior
/// vertices; throws PositivityError if u <= 0 anywhere.
double logu_check(const TriMesh& mesh, const SurfaceGeometry& geom, const ScalarField& u);

}  // namespace shrinklab
