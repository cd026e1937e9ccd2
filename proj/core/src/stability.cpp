#include "shrinklab/stability.hpp"

#include <Eigen/Geometry>
#include <cmath>

#include "shrinklab/errors.hpp"
#include "shrinklab/residual.hpp"

namespace shrinklab {

QuadraticFormReport quadratic_form(const TriMesh& mesh, const SurfaceGeometry& geom,
                                   const ScalarField& u) {
    if (!is_compactly_supported(mesh, u))
        throw SupportError("quadratic form requires a compactly supported field");

    QuadraticFormReport rep;

    // direct route through the operator
    const ScalarField lu = apply_L(mesh, geom, u);
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
        rep.value -= u(v) * lu(v) * geom.vertex_area(v) * geom.gaussian_weight(v);

    // integrated-by-parts route: the gradient term is assembled per triangle
    // with the weight at the centroid
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
        const int i0 = mesh.triangles(t, 0), i1 = mesh.triangles(t, 1), i2 = mesh.triangles(t, 2);
        const Eigen::Vector3d p0 = mesh.vertices.row(i0), p1 = mesh.vertices.row(i1),
                              p2 = mesh.vertices.row(i2);
        const Eigen::Vector3d nvec = (p1 - p0).cross(p2 - p0);
        const double two_area = nvec.norm();
        const Eigen::Vector3d n = nvec / two_area;
        const Eigen::Vector3d grad =
            (u(i0) * n.cross(p2 - p1) + u(i1) * n.cross(p0 - p2) + u(i2) * n.cross(p1 - p0)) /
            two_area;
        const Eigen::Vector3d centroid = (p0 + p1 + p2) / 3.0;
        rep.gradient_term +=
            0.5 * two_area * grad.squaredNorm() * std::exp(-0.25 * centroid.squaredNorm());
    }
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
        const double mass = u(v) * u(v) * geom.vertex_area(v) * geom.gaussian_weight(v);
        rep.curvature_term += geom.second_fund_norm_sq(v) * mass;
        rep.zeroth_term += 0.5 * mass;
    }
    return rep;
}

double translation_eigen_check(const TriMesh& mesh, const SurfaceGeometry& geom,
                               const Eigen::Vector3d& v, double residual_threshold) {
    const ShrinkerResidual res = shrinker_residual(mesh, geom);
    if (res.norm_inf > residual_threshold)
        throw NotAShrinkerError("shrinker residual " + std::to_string(res.norm_inf) +
                                " exceeds threshold " + std::to_string(residual_threshold));

    ScalarField u(mesh.vertex_count());
    for (Eigen::Index i = 0; i < mesh.vertex_count(); ++i) u(i) = geom.normal.row(i).dot(v);
    const ScalarField lu = apply_L(mesh, geom, u);
    return interior_max_abs(mesh, lu - 0.5 * u);
}

double logu_check(const TriMesh& mesh, const SurfaceGeometry& geom, const ScalarField& u) {
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
        if (!(u(v) > 0.0))
            throw PositivityError("log substitution requires u > 0, got " + std::to_string(u(v)) +
                                  " at vertex " + std::to_string(v));

    const ScalarField w = u.array().log().matrix();
    const ScalarField lap_w = laplace_beltrami(mesh, geom, w);
    const ScalarField lu = apply_L(mesh, geom, u);
    const Eigen::MatrixX3d grad_w = tangential_gradient(mesh, geom, w);

    ScalarField res(mesh.vertex_count());
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
        const double drift = mesh.vertices.row(v).dot(grad_w.row(v));
        res(v) = lap_w(v) - (lu(v) / u(v) - geom.second_fund_norm_sq(v) + 0.5 * drift - 0.5 -
                             grad_w.row(v).squaredNorm());
    }
    return interior_max_abs(mesh, res);
}

}  // namespace shrinklab
