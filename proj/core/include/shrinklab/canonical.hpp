#pragma once

#include <string>

#include "shrinklab/mesh.hpp"

namespace shrinklab {

/// The three model surfaces satisfying H = <x,n>/2: the plane through the
/// origin, the sphere of radius 2, and the cylinder of radius sqrt(2) about
/// the z-axis (truncated to a finite patch for the noncompact ones).
enum class CanonicalKind { Plane, Sphere, Cylinder };

CanonicalKind parse_canonical_kind(const std::string& name);
std::string to_string(CanonicalKind kind);

/// Canonical mesh at a refinement level (resolution >= 1). Each level halves
/// the edge length:
///  - plane: square patch of half-width 8 in z = 0, 2^(resolution+3) cells per side,
///  - sphere: icosphere of radius 2 with `resolution` subdivision levels,
///  - cylinder: radius sqrt(2), axial half-length 8, 2^(resolution+3) vertices around,
///    open ends flagged as boundary.
TriMesh make_canonical(CanonicalKind kind, int resolution);

/// Icosahedron subdivided `subdivisions` times and projected to the sphere.
TriMesh make_icosphere(double radius, int subdivisions);

/// Uniformly triangulated square patch [-half_width, half_width]^2 in z = 0.
TriMesh make_plane_patch(double half_width, int cells_per_side);

/// Open cylinder of the given radius about the z-axis, |z| <= half_length.
TriMesh make_cylinder(double radius, double half_length, int n_around, int n_axial);

}  // namespace shrinklab
