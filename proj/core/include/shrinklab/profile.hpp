#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>

#include "shrinklab/mesh.hpp"

namespace shrinklab {

/// Sampled generating curve (r, z) of a surface of revolution about the
/// z-axis, with the tangent angle theta (dr/ds = cos theta, dz/ds = sin
/// theta). Closed curves wrap around: the first sample is not repeated.
struct ProfileCurve {
    Eigen::VectorXd r;      // > 0
    Eigen::VectorXd z;
    Eigen::VectorXd theta;  // tangent angle (radians)
    bool closed = false;

    Eigen::Index sample_count() const { return r.size(); }
};

/// Validates r > 0 and distinct consecutive samples. Throws AxisCrossingError
/// or DegeneracyError.
ProfileCurve make_profile(Eigen::VectorXd r, Eigen::VectorXd z, Eigen::VectorXd theta,
                          bool closed);

/// Cumulative chord arclength starting at 0 (wraps for closed profiles, so
/// the result has sample_count()+1 entries; the last is the total length).
Eigen::VectorXd profile_arclength(const ProfileCurve& profile);

/// Generating arc of the radius-R sphere: r = R sin(s/R), z = -R cos(s/R),
/// uniformly sampled and stopping half a step short of the axis poles.
ProfileCurve sphere_profile(double radius, int samples);

/// Generating line of the cylinder r = radius, z in [-half_length, half_length].
ProfileCurve cylinder_profile(double radius, double half_length, int samples);

/// Surface of revolution about the z-axis. Closed profiles give closed
/// meshes; open profiles leave their ends as boundary rings.
/// angular_resolution >= 8.
TriMesh revolve(const ProfileCurve& profile, int angular_resolution);

/// CSV serialization with columns s,r,z,theta.
void write_profile_csv(std::ostream& out, const ProfileCurve& profile);
void write_profile_csv_file(const std::string& path, const ProfileCurve& profile);
ProfileCurve read_profile_csv(std::istream& in, bool closed);

}  // namespace shrinklab
