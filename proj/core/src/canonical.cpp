#include "shrinklab/canonical.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "shrinklab/errors.hpp"

namespace shrinklab {

CanonicalKind parse_canonical_kind(const std::string& name) {
    if (name == "plane") return CanonicalKind::Plane;
    if (name == "sphere") return CanonicalKind::Sphere;
    if (name == "cylinder") return CanonicalKind::Cylinder;
    throw IoError("unknown canonical surface '" + name + "' (expected plane|sphere|cylinder)");
}

std::string to_string(CanonicalKind kind) {
    switch (kind) {
        case CanonicalKind::Plane: return "plane";
        case CanonicalKind::Sphere: return "sphere";
        case CanonicalKind::Cylinder: return "cylinder";
    }
    return "?";
}

TriMesh make_icosphere(double radius, int subdivisions) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Eigen::Vector3d> verts = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1},
    };
    // outward (counterclockwise seen from outside)
    std::vector<Eigen::Vector3i> faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
    };
    for (auto& v : verts) v.normalize();

    for (int level = 0; level < subdivisions; ++level) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            Eigen::Vector3d m = (verts[static_cast<size_t>(a)] + verts[static_cast<size_t>(b)]).normalized();
            verts.push_back(m);
            int idx = static_cast<int>(verts.size()) - 1;
            midpoint.emplace(key, idx);
            return idx;
        };
        std::vector<Eigen::Vector3i> refined;
        refined.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            int ab = mid(f[0], f[1]);
            int bc = mid(f[1], f[2]);
            int ca = mid(f[2], f[0]);
            refined.push_back({f[0], ab, ca});
            refined.push_back({f[1], bc, ab});
            refined.push_back({f[2], ca, bc});
            refined.push_back({ab, bc, ca});
        }
        faces = std::move(refined);
    }

    Eigen::MatrixX3d v(static_cast<Eigen::Index>(verts.size()), 3);
    for (size_t i = 0; i < verts.size(); ++i) v.row(static_cast<Eigen::Index>(i)) = radius * verts[i];
    Eigen::MatrixX3i f(static_cast<Eigen::Index>(faces.size()), 3);
    for (size_t i = 0; i < faces.size(); ++i) f.row(static_cast<Eigen::Index>(i)) = faces[i];
    return make_mesh(std::move(v), std::move(f));
}

TriMesh make_plane_patch(double half_width, int cells_per_side) {
    const int n = cells_per_side;
    const int stride = n + 1;
    Eigen::MatrixX3d v(stride * stride, 3);
    for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) {
            double x = -half_width + 2.0 * half_width * i / n;
            double y = -half_width + 2.0 * half_width * j / n;
            v.row(j * stride + i) << x, y, 0.0;
        }
    }
    Eigen::MatrixX3i f(2 * n * n, 3);
    Eigen::Index t = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            int v00 = j * stride + i;
            int v10 = v00 + 1;
            int v01 = v00 + stride;
            int v11 = v01 + 1;
            // normal +z
            f.row(t++) << v00, v10, v11;
            f.row(t++) << v00, v11, v01;
        }
    }
    return make_mesh(std::move(v), std::move(f));
}

TriMesh make_cylinder(double radius, double half_length, int n_around, int n_axial) {
    const double two_pi = 2.0 * std::numbers::pi;
    Eigen::MatrixX3d v((n_axial + 1) * n_around, 3);
    for (int i = 0; i <= n_axial; ++i) {
        double z = -half_length + 2.0 * half_length * i / n_axial;
        for (int j = 0; j < n_around; ++j) {
            double phi = two_pi * j / n_around;
            v.row(i * n_around + j) << radius * std::cos(phi), radius * std::sin(phi), z;
        }
    }
    Eigen::MatrixX3i f(2 * n_axial * n_around, 3);
    Eigen::Index t = 0;
    for (int i = 0; i < n_axial; ++i) {
        for (int j = 0; j < n_around; ++j) {
            int jn = (j + 1) % n_around;
            int v00 = i * n_around + j;
            int v01 = i * n_around + jn;
            int v10 = (i + 1) * n_around + j;
            int v11 = (i + 1) * n_around + jn;
            // outward normals
            f.row(t++) << v00, v01, v11;
            f.row(t++) << v00, v11, v10;
        }
    }
    return make_mesh(std::move(v), std::move(f));
}

TriMesh make_canonical(CanonicalKind kind, int resolution) {
    if (resolution < 1) throw IoError("canonical resolution must be >= 1");
    switch (kind) {
        case CanonicalKind::Plane:
            return make_plane_patch(8.0, 1 << (resolution + 3));
        case CanonicalKind::Sphere:
            return make_icosphere(2.0, resolution);
        case CanonicalKind::Cylinder: {
            const double radius = std::sqrt(2.0);
            const int n_around = 1 << (resolution + 3);
            const double spacing = 2.0 * std::numbers::pi * radius / n_around;
            const int n_axial = static_cast<int>(std::lround(16.0 / spacing));
            return make_cylinder(radius, 8.0, n_around, n_axial);
        }
    }
    throw IoError("unreachable canonical kind");
}

}  // namespace shrinklab
