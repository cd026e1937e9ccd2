#include "shrinklab/mesh.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "shrinklab/errors.hpp"

namespace shrinklab {

namespace {

inline uint64_t directed_key(int a, int b) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

}  // namespace

bool TriMesh::is_closed() const {
    return std::none_of(boundary.begin(), boundary.end(), [](char c) { return c != 0; });
}

double triangle_area(const TriMesh& mesh, Eigen::Index t) {
    const auto& f = mesh.triangles;
    Eigen::Vector3d a = mesh.vertices.row(f(t, 0));
    Eigen::Vector3d b = mesh.vertices.row(f(t, 1));
    Eigen::Vector3d c = mesh.vertices.row(f(t, 2));
    return 0.5 * (b - a).cross(c - a).norm();
}

Eigen::Vector3d triangle_normal(const TriMesh& mesh, Eigen::Index t) {
    const auto& f = mesh.triangles;
    Eigen::Vector3d a = mesh.vertices.row(f(t, 0));
    Eigen::Vector3d b = mesh.vertices.row(f(t, 1));
    Eigen::Vector3d c = mesh.vertices.row(f(t, 2));
    Eigen::Vector3d n = (b - a).cross(c - a);
    double len = n.norm();
    if (len == 0.0) throw DegeneracyError("triangle " + std::to_string(t) + " has zero area");
    return n / len;
}

TriMesh make_mesh(Eigen::MatrixX3d vertices, Eigen::MatrixX3i triangles) {
    TriMesh mesh;
    mesh.vertices = std::move(vertices);
    mesh.triangles = std::move(triangles);

    const Eigen::Index nv = mesh.vertices.rows();
    const Eigen::Index nf = mesh.triangles.rows();
    if (nf == 0) throw DegeneracyError("mesh has no triangles");

    for (Eigen::Index t = 0; t < nf; ++t) {
        for (int k = 0; k < 3; ++k) {
            int v = mesh.triangles(t, k);
            if (v < 0 || v >= nv)
                throw OrientationError("triangle " + std::to_string(t) + " references vertex " +
                                       std::to_string(v) + " out of range");
        }
        if (mesh.triangles(t, 0) == mesh.triangles(t, 1) ||
            mesh.triangles(t, 1) == mesh.triangles(t, 2) ||
            mesh.triangles(t, 2) == mesh.triangles(t, 0))
            throw DegeneracyError("triangle " + std::to_string(t) + " has a repeated vertex");
    }

    // degeneracy floor: 1e-12 of the mean triangle area
    double mean_area = 0.0;
    std::vector<double> areas(static_cast<size_t>(nf));
    for (Eigen::Index t = 0; t < nf; ++t) {
        areas[static_cast<size_t>(t)] = triangle_area(mesh, t);
        mean_area += areas[static_cast<size_t>(t)];
    }
    mean_area /= static_cast<double>(nf);
    for (Eigen::Index t = 0; t < nf; ++t) {
        if (areas[static_cast<size_t>(t)] < 1e-12 * mean_area)
            throw DegeneracyError("triangle " + std::to_string(t) + " area " +
                                  std::to_string(areas[static_cast<size_t>(t)]) +
                                  " below 1e-12 of mean area");
    }

    // Directed edges must be unique; each undirected edge carried by at most
    // two triangles, traversed in opposite directions.
    std::unordered_set<uint64_t> directed;
    directed.reserve(static_cast<size_t>(3 * nf));
    for (Eigen::Index t = 0; t < nf; ++t) {
        for (int k = 0; k < 3; ++k) {
            int a = mesh.triangles(t, k);
            int b = mesh.triangles(t, (k + 1) % 3);
            if (!directed.insert(directed_key(a, b)).second)
                throw OrientationError("directed edge (" + std::to_string(a) + "," +
                                       std::to_string(b) +
                                       ") appears twice: non-manifold or inconsistent winding");
        }
    }

    mesh.boundary.assign(static_cast<size_t>(nv), 0);
    for (uint64_t key : directed) {
        int a = static_cast<int>(key >> 32);
        int b = static_cast<int>(key & 0xffffffffu);
        if (directed.find(directed_key(b, a)) == directed.end()) {
            mesh.boundary[static_cast<size_t>(a)] = 1;
            mesh.boundary[static_cast<size_t>(b)] = 1;
        }
    }
    return mesh;
}

int boundary_loop_count(const TriMesh& mesh) {
    // boundary half-edges are directed edges without an opposite
    std::unordered_set<uint64_t> directed;
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t)
        for (int k = 0; k < 3; ++k)
            directed.insert(directed_key(mesh.triangles(t, k), mesh.triangles(t, (k + 1) % 3)));

    std::unordered_map<int, int> next;  // boundary edge b->a successor map
    for (uint64_t key : directed) {
        int a = static_cast<int>(key >> 32);
        int b = static_cast<int>(key & 0xffffffffu);
        if (directed.find(directed_key(b, a)) == directed.end()) {
            // (a,b) has no twin; the boundary is traversed opposite to the
            // interior winding, i.e. from b to a.
            if (next.count(b))
                throw OrientationError("boundary vertex " + std::to_string(b) +
                                       " has multiple outgoing boundary edges");
            next[b] = a;
        }
    }

    int loops = 0;
    std::unordered_set<int> seen;
    for (const auto& [start, _] : next) {
        if (seen.count(start)) continue;
        ++loops;
        int v = start;
        while (!seen.count(v)) {
            seen.insert(v);
            auto it = next.find(v);
            if (it == next.end())
                throw OrientationError("open boundary chain at vertex " + std::to_string(v));
            v = it->second;
        }
    }
    return loops;
}

int genus(const TriMesh& mesh) {
    std::unordered_set<uint64_t> undirected;
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
        for (int k = 0; k < 3; ++k) {
            int a = mesh.triangles(t, k);
            int b = mesh.triangles(t, (k + 1) % 3);
            undirected.insert(directed_key(std::min(a, b), std::max(a, b)));
        }
    }
    const long long v = mesh.vertex_count();
    const long long e = static_cast<long long>(undirected.size());
    const long long f = mesh.triangle_count();
    const long long chi = v - e + f;
    const long long b = boundary_loop_count(mesh);
    const long long twice_genus = 2 - chi - b;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw OrientationError("Euler characteristic " + std::to_string(chi) + " with " +
                               std::to_string(b) + " boundary loops is not an orientable surface");
    return static_cast<int>(twice_genus / 2);
}

double mean_edge_length(const TriMesh& mesh) {
    std::unordered_set<uint64_t> undirected;
    double sum = 0.0;
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
        for (int k = 0; k < 3; ++k) {
            int a = mesh.triangles(t, k);
            int b = mesh.triangles(t, (k + 1) % 3);
            if (undirected.insert(directed_key(std::min(a, b), std::max(a, b))).second)
                sum += (mesh.vertices.row(a) - mesh.vertices.row(b)).norm();
        }
    }
    return sum / static_cast<double>(undirected.size());
}

double min_edge_length(const TriMesh& mesh) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t)
        for (int k = 0; k < 3; ++k)
            best = std::min(best, (mesh.vertices.row(mesh.triangles(t, k)) -
                                   mesh.vertices.row(mesh.triangles(t, (k + 1) % 3)))
                                      .norm());
    return best;
}

double total_area(const TriMesh& mesh) {
    double a = 0.0;
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) a += triangle_area(mesh, t);
    return a;
}

double max_vertex_norm(const TriMesh& mesh) {
    return mesh.vertices.rowwise().norm().maxCoeff();
}

TriMesh scaled(const TriMesh& mesh, double factor) {
    TriMesh out = mesh;
    out.vertices *= factor;
    return out;
}

TriMesh remove_triangles(const TriMesh& mesh, const std::vector<int>& doomed) {
    std::unordered_set<int> kill(doomed.begin(), doomed.end());
    std::vector<int> keep;
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t)
        if (!kill.count(static_cast<int>(t))) keep.push_back(static_cast<int>(t));

    std::vector<int> remap(static_cast<size_t>(mesh.vertex_count()), -1);
    int nv = 0;
    Eigen::MatrixX3i tris(static_cast<Eigen::Index>(keep.size()), 3);
    for (size_t i = 0; i < keep.size(); ++i) {
        for (int k = 0; k < 3; ++k) {
            int v = mesh.triangles(keep[i], k);
            if (remap[static_cast<size_t>(v)] < 0) remap[static_cast<size_t>(v)] = nv++;
            tris(static_cast<Eigen::Index>(i), k) = remap[static_cast<size_t>(v)];
        }
    }
    Eigen::MatrixX3d verts(nv, 3);
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
        if (remap[static_cast<size_t>(v)] >= 0) verts.row(remap[static_cast<size_t>(v)]) = mesh.vertices.row(v);
    return make_mesh(std::move(verts), std::move(tris));
}

double at_interior(const TriMesh& mesh, const ScalarField& field, Eigen::Index v,
                   bool trust_boundary) {
    if (!trust_boundary && mesh.is_boundary_vertex(v))
        throw BoundaryError("vertex " + std::to_string(v) +
                            " lies on the boundary; its operator values are one-sided");
    return field(v);
}

double interior_max_abs(const TriMesh& mesh, const ScalarField& field) {
    double best = 0.0;
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
        if (!mesh.is_boundary_vertex(v)) best = std::max(best, std::abs(field(v)));
    return best;
}

bool is_compactly_supported(const TriMesh& mesh, const ScalarField& field) {
    if (field.size() != mesh.vertex_count()) return false;
    if (mesh.is_closed()) return true;
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
        bool touches = false;
        for (int k = 0; k < 3; ++k) touches |= mesh.is_boundary_vertex(mesh.triangles(t, k));
        if (!touches) continue;
        for (int k = 0; k < 3; ++k)
            if (field(mesh.triangles(t, k)) != 0.0) return false;
    }
    return true;
}

namespace {

// closest point on triangle (a,b,c) to p, Ericson's barycentric case analysis
Eigen::Vector3d closest_point_on_triangle(const Eigen::Vector3d& p, const Eigen::Vector3d& a,
                                          const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
    Eigen::Vector3d ab = b - a, ac = c - a, ap = p - a;
    double d1 = ab.dot(ap), d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return a;

    Eigen::Vector3d bp = p - b;
    double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return b;

    double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + (d1 / (d1 - d3)) * ab;

    Eigen::Vector3d cp = p - c;
    double d5 = ab.dot(cp), d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return c;

    double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + (d2 / (d2 - d6)) * ac;

    double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0)
        return b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);

    double denom = 1.0 / (va + vb + vc);
    return a + ab * (vb * denom) + ac * (vc * denom);
}

}  // namespace

Eigen::Vector3d closest_mesh_point(const TriMesh& mesh, const Eigen::Vector3d& p) {
    double best = std::numeric_limits<double>::infinity();
    Eigen::Vector3d best_q = mesh.vertices.row(0);
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
        Eigen::Vector3d a = mesh.vertices.row(mesh.triangles(t, 0));
        Eigen::Vector3d b = mesh.vertices.row(mesh.triangles(t, 1));
        Eigen::Vector3d c = mesh.vertices.row(mesh.triangles(t, 2));
        // cheap reject on the circumscribing ball
        Eigen::Vector3d ctr = (a + b + c) / 3.0;
        double r = std::sqrt(std::max({(a - ctr).squaredNorm(), (b - ctr).squaredNorm(),
                                       (c - ctr).squaredNorm()}));
        double lower = (p - ctr).norm() - r;
        if (lower >= best) continue;
        Eigen::Vector3d q = closest_point_on_triangle(p, a, b, c);
        double d = (p - q).norm();
        if (d < best) {
            best = d;
            best_q = q;
        }
    }
    return best_q;
}

double point_mesh_distance(const TriMesh& mesh, const Eigen::Vector3d& p) {
    return (p - closest_mesh_point(mesh, p)).norm();
}

}  // namespace shrinklab
