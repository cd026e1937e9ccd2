#pragma once

#include <Eigen/Core>
#include <vector>

namespace shrinklab {

/// Per-vertex (or per-profile-sample) scalar values.
using ScalarField = Eigen::VectorXd;

/// Oriented triangle mesh embedded in R^3.
///
/// Invariants established by make_mesh():
///  - every edge is shared by at most two triangles (manifold),
///  - adjacent triangles traverse shared edges in opposite directions
///    (consistent orientation),
///  - no triangle area below 1e-12 of the mean triangle area,
///  - boundary[] marks vertices incident to an edge with only one triangle.
///
/// Instances are immutable after construction and safe to share across
/// threads.
struct TriMesh {
    Eigen::MatrixX3d vertices;
    Eigen::MatrixX3i triangles;
    std::vector<char> boundary;  // per-vertex boundary flag

    Eigen::Index vertex_count() const { return vertices.rows(); }
    Eigen::Index triangle_count() const { return triangles.rows(); }
    bool is_closed() const;
    bool is_boundary_vertex(Eigen::Index v) const { return boundary[static_cast<size_t>(v)] != 0; }
};

/// Validates the manifold/orientation/degeneracy invariants and computes
/// boundary flags. Throws OrientationError or DegeneracyError.
TriMesh make_mesh(Eigen::MatrixX3d vertices, Eigen::MatrixX3i triangles);

/// Number of distinct boundary loops.
int boundary_loop_count(const TriMesh& mesh);

/// Genus of the closed surface obtained by capping each boundary loop with a
/// disk: g = (2 - chi)/2 for closed meshes and g = (2 - chi - b)/2 with b
/// boundary loops otherwise.
int genus(const TriMesh& mesh);

double mean_edge_length(const TriMesh& mesh);
double min_edge_length(const TriMesh& mesh);
double total_area(const TriMesh& mesh);

/// Largest vertex distance from the origin.
double max_vertex_norm(const TriMesh& mesh);

/// Mesh with all vertex positions multiplied by `factor` (same connectivity).
TriMesh scaled(const TriMesh& mesh, double factor);

/// Mesh with the given triangles removed (vertices are kept, then compacted).
/// Used for subsurface/topology experiments.
TriMesh remove_triangles(const TriMesh& mesh, const std::vector<int>& doomed);

/// Triangle area and unit normal for triangle t (winding order).
double triangle_area(const TriMesh& mesh, Eigen::Index t);
Eigen::Vector3d triangle_normal(const TriMesh& mesh, Eigen::Index t);

/// Checked accessor: value of `field` at vertex v. Throws BoundaryError when v
/// lies on the boundary unless `trust_boundary` is set; boundary rows of
/// differential operators are one-sided estimates.
double at_interior(const TriMesh& mesh, const ScalarField& field, Eigen::Index v,
                   bool trust_boundary = false);

/// max |field| over interior vertices (all vertices when the mesh is closed).
double interior_max_abs(const TriMesh& mesh, const ScalarField& field);

/// True when the field vanishes at every boundary vertex and every vertex
/// sharing a triangle with one (compact support clear of the boundary).
bool is_compactly_supported(const TriMesh& mesh, const ScalarField& field);

/// Euclidean distance from point p to the closest point of any mesh triangle.
double point_mesh_distance(const TriMesh& mesh, const Eigen::Vector3d& p);

/// The closest point itself.
Eigen::Vector3d closest_mesh_point(const TriMesh& mesh, const Eigen::Vector3d& p);

}  // namespace shrinklab
