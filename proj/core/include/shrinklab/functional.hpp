#pragma once

#include "shrinklab/geometry.hpp"
#include "shrinklab/mesh.hpp"

namespace shrinklab {

/// Compactly supported normal variation speed: positions move as x + s f n.
struct VariationField {
    ScalarField f;               // normal speed (length units)
    std::vector<char> support;   // per-vertex flag, 0 where f must vanish
};

/// Wraps f after checking compact support: f = 0 at boundary vertices and
/// their one-ring. Throws SupportError otherwise.
VariationField make_variation(const TriMesh& mesh, ScalarField f);

/// Gaussian-weighted area functional
///   F = (4 pi)^(-1) * integral of exp(-|x|^2/4) dmu
/// for surfaces in R^3. Critical points are exactly the shrinkers.
double F_value(const TriMesh& mesh, const SurfaceGeometry& geom);

/// Truncation bound: the part of F a noncompact surface can carry beyond the
/// mesh's largest |x| is below this (Gaussian tail of the area growth).
double F_truncation_bound(const TriMesh& mesh);

/// First variation of F under x' = f n:
///   dF/ds = (4 pi)^(-1) * integral of f (H - <x,n>/2) exp(-|x|^2/4) dmu.
double first_variation(const TriMesh& mesh, const SurfaceGeometry& geom,
                       const VariationField& var);

struct VariationCheck {
    double fd = 0.0;        // central finite difference of F
    double analytic = 0.0;  // first_variation
    /// relative mismatch of the per-vertex area derivative against f*H*area,
    /// integrated over interior vertices
    double area_identity_residual = 0.0;
};

/// Central-difference probe of dF/ds at step s, plus the area-variation
/// identity (dmu)' = f H dmu tested per vertex. Throws StepError when the
/// offset meshes degenerate.
VariationCheck fd_variation_check(const TriMesh& mesh, const VariationField& var, double step);

}  // namespace shrinklab
