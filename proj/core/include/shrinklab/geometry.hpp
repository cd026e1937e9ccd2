#pragma once

#include <Eigen/Core>
#include <vector>

#include "shrinklab/mesh.hpp"

namespace shrinklab {

/// Per-vertex discrete surface fields.
///
/// Sign convention: H = div n with outward n, so H converges to 2/R on the
/// radius-R sphere under refinement.
struct SurfaceGeometry {
    Eigen::MatrixX3d normal;              // unit vertex normals
    Eigen::VectorXd mean_curvature;       // H, signed against `normal`
    Eigen::VectorXd second_fund_norm_sq;  // |A|^2 = sum of squared principal curvatures
    Eigen::VectorXd vertex_area;          // mixed Voronoi cell areas
    Eigen::VectorXd gaussian_weight;      // exp(-|x|^2/4)
};

/// Computes all per-vertex fields. H is the cotangent mean-curvature vector
/// projected on the vertex normal; |A|^2 comes from a least-squares quadric
/// fit over the vertex ring; vertex areas are mixed Voronoi cells.
SurfaceGeometry compute_geometry(const TriMesh& mesh);

/// Cotangent Laplace-Beltrami of u divided by vertex area. Rows at boundary
/// vertices are one-sided estimates; treat them via mesh.boundary.
ScalarField laplace_beltrami(const TriMesh& mesh, const SurfaceGeometry& geom,
                             const ScalarField& u);

/// Per-vertex averaged piecewise-linear gradient of u, projected onto the
/// tangent plane of the vertex normal.
Eigen::MatrixX3d tangential_gradient(const TriMesh& mesh, const SurfaceGeometry& geom,
                                     const ScalarField& u);

/// The drift stability operator
///   L u = Laplace(u) + |A|^2 u - <x, grad u>/2 + u/2.
ScalarField apply_L(const TriMesh& mesh, const SurfaceGeometry& geom, const ScalarField& u);

/// Gaussian-weighted integral sum_v u_v * area_v * exp(-|x_v|^2/4), summed in
/// fixed vertex order (bit-reproducible).
double weighted_integral(const TriMesh& mesh, const SurfaceGeometry& geom, const ScalarField& u);

/// sqrt of the Gaussian-weighted integral of field^2 over interior vertices.
double weighted_l2_interior(const TriMesh& mesh, const SurfaceGeometry& geom,
                            const ScalarField& field);

/// max over (center, radius) pairs of Area(B_R(x0) cap mesh) / R^2, with
/// triangles clipped against the ball boundary by chordal subdivision.
double area_growth_ratio(const TriMesh& mesh, const std::vector<Eigen::Vector3d>& centers,
                         const std::vector<double>& radii);

/// Area of the part of the mesh inside the ball of radius R about c.
double clipped_area(const TriMesh& mesh, const Eigen::Vector3d& center, double radius);

}  // namespace shrinklab
