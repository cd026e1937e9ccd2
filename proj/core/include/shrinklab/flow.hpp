#pragma once

#include "shrinklab/geometry.hpp"
#include "shrinklab/mesh.hpp"

namespace shrinklab {

/// Mesh moving by mean curvature: (d/dt x)^perp = -H n. Boundary vertices of
/// truncated surfaces are held in place.
struct FlowState {
    TriMesh mesh;
    double t = -1.0;       // flow time (length^2)
    long step_count = 0;
    bool embedded_hint = true;  // cheap displacement heuristic, not a guarantee
};

enum class FlowScheme { Explicit, SemiImplicit };

/// Largest explicit step the diffusion stability bound allows: c * h_min^2.
double stable_timestep(const TriMesh& mesh, double safety = 0.25);

/// One step, x <- x - dt H n (explicit) or with the cotangent operator frozen
/// and the positions solved implicitly. Explicit steps beyond the stability
/// bound raise TimestepError.
FlowState mcf_step(const FlowState& state, double dt, FlowScheme scheme = FlowScheme::Explicit);

/// Integrates to t_end, re-deriving the stable step from the current mesh
/// every step (explicit) or using dt_cap (semi-implicit).
FlowState flow_to(FlowState state, double t_end, FlowScheme scheme = FlowScheme::Explicit,
                  double safety = 0.125, double dt_cap = 1e30);

/// Residual of the t-slice equation H = -<x,n>/(2t) on sqrt(-t) * sigma, in
/// the max norm over interior vertices. Requires t < 0.
double selfsimilar_residual(const TriMesh& sigma, double t);

/// Flows sqrt(-t0) * sigma to t1 and compares against sqrt(-t1) * sigma in
/// the symmetric vertex-to-surface Hausdorff distance, skipping vertices
/// within `collar` of either surface's boundary. Requires -1 <= t0 < t1 < 0.
double rescaled_trajectory_check(const TriMesh& sigma, double t0, double t1, int steps,
                                 double collar = 1.0);

/// One-sided ingredient of the trajectory check (exposed for diagnostics).
double collar_hausdorff(const TriMesh& from, const TriMesh& to, double collar);

}  // namespace shrinklab
