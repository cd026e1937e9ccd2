#include "shrinklab/residual.hpp"

namespace shrinklab {

ShrinkerResidual shrinker_residual(const TriMesh& mesh, const SurfaceGeometry& geom) {
    ShrinkerResidual out;
    out.pointwise.resize(mesh.vertex_count());
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
        out.pointwise(v) =
            geom.mean_curvature(v) - 0.5 * mesh.vertices.row(v).dot(geom.normal.row(v));
    out.norm_inf = interior_max_abs(mesh, out.pointwise);
    out.norm_l2_weighted = weighted_l2_interior(mesh, geom, out.pointwise);
    return out;
}

}  // namespace shrinklab
