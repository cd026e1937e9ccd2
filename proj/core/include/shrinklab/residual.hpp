#pragma once

#include "shrinklab/geometry.hpp"
#include "shrinklab/mesh.hpp"

namespace shrinklab {

/// Pointwise defect of the shrinker equation, H - <x,n>/2, with norms taken
/// over interior vertices only.
struct ShrinkerResidual {
    ScalarField pointwise;   // 1/length
    double norm_inf = 0.0;
    double norm_l2_weighted = 0.0;  // Gaussian-weighted L2
};

ShrinkerResidual shrinker_residual(const TriMesh& mesh, const SurfaceGeometry& geom);

}  // namespace shrinklab
