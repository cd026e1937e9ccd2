#pragma once

#include <optional>
#include <vector>

#include "shrinklab/profile.hpp"

namespace shrinklab {

/// State of the rotationally symmetric generating-curve ODE, parametrized by
/// arclength s.
struct ShootingState {
    double r = 0.0;      // distance to the z-axis, > 0
    double z = 0.0;
    double theta = 0.0;  // tangent angle: (dr/ds, dz/ds) = (cos theta, sin theta)
    double s = 0.0;
};

/// Arclength derivative of the state for a shrinking hypersurface of
/// revolution in R^(n+1):
///   dr/ds     = cos(theta)
///   dz/ds     = sin(theta)
///   dtheta/ds = (r sin(theta) - z cos(theta))/2 - (n-1) sin(theta)/r.
///
/// The profile curvature dtheta/ds plus the rotational principal curvature
/// (n-1) sin(theta)/r is the mean curvature, and the right-hand side equates
/// it to <x,n>/2 = (r sin(theta) - z cos(theta))/2. Validated against
/// shrinker_residual on revolved meshes.
ShootingState profile_ode_rhs(const ShootingState& state, int dimension);

/// One classical 4th-order step of size ds.
ShootingState rk4_step(const ShootingState& state, double ds, int dimension);

enum class OrbitEnd { ReturnedToPlane, HitAxis, Escaped, StepLimit };

struct OdeOptions {
    int dimension = 2;
    double step = 1e-3;
    double max_arclength = 40.0;
    double escape_radius = 20.0;
    double axis_floor = 1e-6;
    int record_stride = 1;  // keep every k-th state
};

struct Orbit {
    std::vector<ShootingState> states;
    OrbitEnd end = OrbitEnd::StepLimit;
    ShootingState final;  // plane-crossing state when end == ReturnedToPlane
};

/// Integrates from `start` until z crosses 0 again (the crossing is refined
/// inside the final step), the axis or escape radius is hit, or arclength
/// runs out. Every orbit ends in one of the four reported ways; no NaNs.
Orbit integrate_until_plane_return(const ShootingState& start, const OdeOptions& opts);

/// Tangent-angle defect theta + pi/2 at the first return to z = 0 of the
/// orbit from (r_start, 0, pi/2); a closed symmetric profile has defect 0.
/// Empty when the orbit hits the axis or escapes instead of returning.
std::optional<double> closure_defect(double r_start, const OdeOptions& opts);

struct ShootResult {
    ProfileCurve profile;   // closed, symmetric under z -> -z
    double r_inner = 0.0;   // r at the z = 0 crossing where the search started
    double r_outer = 0.0;   // r at the opposite crossing
    double closure_error = 0.0;  // |r_return - r_start| + angular defect after a full loop
};

/// Bisection over starting radii in [r_lo, r_hi] on the closure defect sign.
/// Returns a closed profile whose full-loop closure error is below tol.
/// Throws BracketError when no sign change exists over the range.
ShootResult shoot_closed_profile(double r_lo, double r_hi, double tol,
                                 const OdeOptions& opts = {});

}  // namespace shrinklab
