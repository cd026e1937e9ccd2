#include "shrinklab/functional.hpp"

#include <cmath>
#include <numbers>
#include <unordered_set>

#include "shrinklab/errors.hpp"

namespace shrinklab {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

}

VariationField make_variation(const TriMesh& mesh, ScalarField f) {
    if (f.size() != mesh.vertex_count())
        throw SupportError("variation field length does not match the mesh");
    if (!is_compactly_supported(mesh, f))
        throw SupportError("variation is nonzero on or next to the boundary");

    VariationField var;
    var.support.resize(static_cast<size_t>(mesh.vertex_count()));
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
        var.support[static_cast<size_t>(v)] = f(v) != 0.0 ? 1 : 0;
    var.f = std::move(f);
    return var;
}

double F_value(const TriMesh& mesh, const SurfaceGeometry& geom) {
    return weighted_integral(mesh, geom, ScalarField::Ones(mesh.vertex_count())) / kFourPi;
}

double F_truncation_bound(const TriMesh& mesh) {
    // crude tail bound assuming the mesh's own scale-invariant area ratio
    // persists beyond the truncation radius
    const double R = max_vertex_norm(mesh);
    const double ratio = std::max(std::numbers::pi, total_area(mesh) / (R * R));
    double tail = 0.0;
    for (int k = 0;; ++k) {
        const double rk = R + k;
        const double term = ratio * (rk + 1.0) * (rk + 1.0) * std::exp(-0.25 * rk * rk);
        tail += term;
        if (term < 1e-20) break;
    }
    return tail / kFourPi;
}

double first_variation(const TriMesh& mesh, const SurfaceGeometry& geom,
                       const VariationField& var) {
    double sum = 0.0;
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
        const double shrinker_defect =
            geom.mean_curvature(v) - 0.5 * mesh.vertices.row(v).dot(geom.normal.row(v));
        sum += var.f(v) * shrinker_defect * geom.vertex_area(v) * geom.gaussian_weight(v);
    }
    return sum / kFourPi;
}

VariationCheck fd_variation_check(const TriMesh& mesh, const VariationField& var, double step) {
    const SurfaceGeometry geom = compute_geometry(mesh);

    const double fmax = var.f.cwiseAbs().maxCoeff();
    if (step * fmax > 0.25 * min_edge_length(mesh))
        throw StepError("offset " + std::to_string(step * fmax) +
                        " is large against the minimum edge length; offset meshes may fold");

    auto offset_mesh = [&](double s) {
        Eigen::MatrixX3d v = mesh.vertices;
        for (Eigen::Index i = 0; i < mesh.vertex_count(); ++i)
            v.row(i) += s * var.f(i) * geom.normal.row(i);
        return make_mesh(std::move(v), mesh.triangles);
    };

    const TriMesh plus = offset_mesh(step);
    const TriMesh minus = offset_mesh(-step);
    const SurfaceGeometry gp = compute_geometry(plus);
    const SurfaceGeometry gm = compute_geometry(minus);

    VariationCheck out;
    out.fd = (F_value(plus, gp) - F_value(minus, gm)) / (2.0 * step);
    out.analytic = first_variation(mesh, geom, var);

    double mismatch = 0.0, scale = 0.0;
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
        if (mesh.is_boundary_vertex(v)) continue;
        const double d_area = (gp.vertex_area(v) - gm.vertex_area(v)) / (2.0 * step);
        mismatch += std::abs(d_area - var.f(v) * geom.mean_curvature(v) * geom.vertex_area(v));
        scale += geom.vertex_area(v);
    }
    out.area_identity_residual = mismatch / scale;
    return out;
}

}  // namespace shrinklab
