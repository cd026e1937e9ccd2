#include "shrinklab/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "shrinklab/errors.hpp"

namespace shrinklab {

namespace {

struct CornerAngles {
    double angle[3];  // interior angle at each corner
    double cot[3];    // cotangent of the angle at each corner
    double area;
};

CornerAngles corner_data(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                         const Eigen::Vector3d& c) {
    CornerAngles out;
    const Eigen::Vector3d e0 = b - a, e1 = c - b, e2 = a - c;
    out.area = 0.5 * e0.cross(-e2).norm();
    auto corner = [](const Eigen::Vector3d& u, const Eigen::Vector3d& v, double& ang, double& ct) {
        const double dot = u.dot(v);
        const double crs = u.cross(v).norm();
        ang = std::atan2(crs, dot);
        ct = dot / crs;
    };
    corner(e0, -e2, out.angle[0], out.cot[0]);   // at a: edges a->b, a->c
    corner(e1, -e0, out.angle[1], out.cot[1]);   // at b
    corner(e2, -e1, out.angle[2], out.cot[2]);   // at c
    return out;
}

// one-ring (optionally grown to two-ring) vertex neighborhoods
std::vector<std::vector<int>> vertex_rings(const TriMesh& mesh) {
    std::vector<std::unordered_set<int>> sets(static_cast<size_t>(mesh.vertex_count()));
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
        for (int k = 0; k < 3; ++k) {
            int a = mesh.triangles(t, k);
            int b = mesh.triangles(t, (k + 1) % 3);
            sets[static_cast<size_t>(a)].insert(b);
            sets[static_cast<size_t>(b)].insert(a);
        }
    }
    std::vector<std::vector<int>> rings(sets.size());
    for (size_t v = 0; v < sets.size(); ++v) {
        rings[v].assign(sets[v].begin(), sets[v].end());
        std::sort(rings[v].begin(), rings[v].end());
    }
    return rings;
}

struct QuadricFit {
    double a = 0, b = 0, c = 0;    // second-order coefficients
    double gu = 0, gv = 0;         // graph gradient at the vertex
    Eigen::Vector3d t1, t2;        // tangent frame used
};

// least-squares quadric w = a u^2/2 + b uv + c v^2/2 + gu u + gv v over the
// given neighbor samples in the frame of n
QuadricFit fit_quadric(const Eigen::Vector3d& x, const Eigen::Vector3d& n,
                       const Eigen::MatrixX3d& vertices, const std::vector<int>& samples) {
    QuadricFit fit;
    fit.t1 = n.unitOrthogonal();
    fit.t2 = n.cross(fit.t1);

    const int m = static_cast<int>(samples.size());
    Eigen::MatrixXd A(m, 5);
    Eigen::VectorXd rhs(m);
    for (int row = 0; row < m; ++row) {
        Eigen::Vector3d d = vertices.row(samples[static_cast<size_t>(row)]).transpose() - x;
        const double u = d.dot(fit.t1);
        const double v = d.dot(fit.t2);
        A.row(row) << 0.5 * u * u, u * v, 0.5 * v * v, u, v;
        rhs(row) = d.dot(n);
    }
    Eigen::VectorXd q = A.colPivHouseholderQr().solve(rhs);
    fit.a = q(0);
    fit.b = q(1);
    fit.c = q(2);
    fit.gu = q(3);
    fit.gv = q(4);
    return fit;
}

// normal of the fitted graph at the vertex: (-grad, 1) in the fit frame
Eigen::Vector3d fit_normal(const Eigen::Vector3d& n, const QuadricFit& fit) {
    return (n - fit.gu * fit.t1 - fit.gv * fit.t2).normalized();
}

double fit_second_fund_norm_sq(const QuadricFit& fit) {
    // first/second fundamental forms of the graph over the tangent plane
    const double g2 = fit.gu * fit.gu + fit.gv * fit.gv;
    const double w = std::sqrt(1.0 + g2);
    Eigen::Matrix2d I;
    I << 1.0 + fit.gu * fit.gu, fit.gu * fit.gv, fit.gu * fit.gv, 1.0 + fit.gv * fit.gv;
    Eigen::Matrix2d II;
    II << fit.a / w, fit.b / w, fit.b / w, fit.c / w;
    Eigen::Matrix2d S = I.inverse() * II;  // shape operator up to overall sign
    const double tr = S.trace();
    const double det = S.determinant();
    return tr * tr - 2.0 * det;  // kappa1^2 + kappa2^2, sign-independent
}

}  // namespace

SurfaceGeometry compute_geometry(const TriMesh& mesh) {
    const Eigen::Index nv = mesh.vertex_count();
    const Eigen::Index nf = mesh.triangle_count();

    SurfaceGeometry g;
    g.normal = Eigen::MatrixX3d::Zero(nv, 3);
    g.mean_curvature = Eigen::VectorXd::Zero(nv);
    g.second_fund_norm_sq = Eigen::VectorXd::Zero(nv);
    g.vertex_area = Eigen::VectorXd::Zero(nv);
    g.gaussian_weight = Eigen::VectorXd::Zero(nv);

    Eigen::MatrixX3d curvature_vec = Eigen::MatrixX3d::Zero(nv, 3);

    for (Eigen::Index t = 0; t < nf; ++t) {
        const int i0 = mesh.triangles(t, 0), i1 = mesh.triangles(t, 1), i2 = mesh.triangles(t, 2);
        const Eigen::Vector3d p0 = mesh.vertices.row(i0), p1 = mesh.vertices.row(i1),
                              p2 = mesh.vertices.row(i2);
        const CornerAngles ca = corner_data(p0, p1, p2);
        if (!(ca.area > 0.0)) throw DegeneracyError("triangle " + std::to_string(t) + " degenerate");

        const Eigen::Vector3d tn = (p1 - p0).cross(p2 - p0).normalized();
        const int idx[3] = {i0, i1, i2};
        const Eigen::Vector3d pos[3] = {p0, p1, p2};

        // angle-weighted vertex normals
        for (int k = 0; k < 3; ++k) g.normal.row(idx[k]) += ca.angle[k] * tn;

        // mixed Voronoi areas (obtuse corners take half, their opposites a quarter)
        const bool obtuse = ca.angle[0] > M_PI_2 || ca.angle[1] > M_PI_2 || ca.angle[2] > M_PI_2;
        for (int k = 0; k < 3; ++k) {
            double part;
            if (!obtuse) {
                // edge (k,ka) is opposite corner kb, edge (k,kb) opposite ka
                const int ka = (k + 1) % 3, kb = (k + 2) % 3;
                part = 0.125 * ((pos[ka] - pos[k]).squaredNorm() * ca.cot[kb] +
                                (pos[kb] - pos[k]).squaredNorm() * ca.cot[ka]);
            } else if (ca.angle[k] > M_PI_2) {
                part = 0.5 * ca.area;
            } else {
                part = 0.25 * ca.area;
            }
            g.vertex_area(idx[k]) += part;
        }

        // cotangent mean-curvature accumulation: for each edge (u,v) the
        // opposite corner contributes cot/2 * (x_u - x_v) to u and vice versa
        for (int k = 0; k < 3; ++k) {
            const int ku = (k + 1) % 3, kv = (k + 2) % 3;
            const double w = 0.5 * ca.cot[k];
            curvature_vec.row(idx[ku]) += w * (pos[ku] - pos[kv]);
            curvature_vec.row(idx[kv]) += w * (pos[kv] - pos[ku]);
        }
    }

    for (Eigen::Index v = 0; v < nv; ++v) {
        const double len = g.normal.row(v).norm();
        if (len == 0.0)
            throw DegeneracyError("vertex " + std::to_string(v) + " has vanishing normal");
        g.normal.row(v) /= len;
        g.gaussian_weight(v) = std::exp(-0.25 * mesh.vertices.row(v).squaredNorm());
    }

    // Quadric fit per vertex, growing to the two-ring when the one-ring is
    // too small to determine the five coefficients. The angle-weighted normal
    // is first-order on irregular stencils, which the Laplacian would amplify;
    // the fitted graph gradient recovers a second-order normal, so correct and
    // refit before reading off |A|^2.
    const auto rings = vertex_rings(mesh);
    for (Eigen::Index v = 0; v < nv; ++v) {
        std::vector<int> samples = rings[static_cast<size_t>(v)];
        if (samples.size() < 5) {
            std::unordered_set<int> grown(samples.begin(), samples.end());
            for (int j : rings[static_cast<size_t>(v)])
                for (int k : rings[static_cast<size_t>(j)])
                    if (k != static_cast<int>(v)) grown.insert(k);
            samples.assign(grown.begin(), grown.end());
            std::sort(samples.begin(), samples.end());
        }
        const Eigen::Vector3d x = mesh.vertices.row(v);
        Eigen::Vector3d n = g.normal.row(v);
        QuadricFit fit = fit_quadric(x, n, mesh.vertices, samples);
        for (int pass = 0; pass < 2; ++pass) {
            n = fit_normal(n, fit);
            fit = fit_quadric(x, n, mesh.vertices, samples);
        }
        g.normal.row(v) = n;
        g.second_fund_norm_sq(v) = fit_second_fund_norm_sq(fit);
    }

    for (Eigen::Index v = 0; v < nv; ++v)
        g.mean_curvature(v) = curvature_vec.row(v).dot(g.normal.row(v)) / g.vertex_area(v);
    return g;
}

ScalarField laplace_beltrami(const TriMesh& mesh, const SurfaceGeometry& geom,
                             const ScalarField& u) {
    ScalarField out = ScalarField::Zero(mesh.vertex_count());
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
        const int i0 = mesh.triangles(t, 0), i1 = mesh.triangles(t, 1), i2 = mesh.triangles(t, 2);
        const CornerAngles ca =
            corner_data(mesh.vertices.row(i0), mesh.vertices.row(i1), mesh.vertices.row(i2));
        const int idx[3] = {i0, i1, i2};
        for (int k = 0; k < 3; ++k) {
            const int ku = idx[(k + 1) % 3], kv = idx[(k + 2) % 3];
            const double w = 0.5 * ca.cot[k];
            out(ku) += w * (u(kv) - u(ku));
            out(kv) += w * (u(ku) - u(kv));
        }
    }
    out.array() /= geom.vertex_area.array();
    return out;
}

Eigen::MatrixX3d tangential_gradient(const TriMesh& mesh, const SurfaceGeometry& geom,
                                     const ScalarField& u) {
    const Eigen::Index nv = mesh.vertex_count();
    Eigen::MatrixX3d acc = Eigen::MatrixX3d::Zero(nv, 3);
    Eigen::VectorXd wsum = Eigen::VectorXd::Zero(nv);

    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
        const int i0 = mesh.triangles(t, 0), i1 = mesh.triangles(t, 1), i2 = mesh.triangles(t, 2);
        const Eigen::Vector3d p0 = mesh.vertices.row(i0), p1 = mesh.vertices.row(i1),
                              p2 = mesh.vertices.row(i2);
        const Eigen::Vector3d nvec = (p1 - p0).cross(p2 - p0);
        const double two_area = nvec.norm();
        const Eigen::Vector3d n = nvec / two_area;
        // gradient of the linear interpolant
        const Eigen::Vector3d grad =
            (u(i0) * n.cross(p2 - p1) + u(i1) * n.cross(p0 - p2) + u(i2) * n.cross(p1 - p0)) /
            two_area;
        const double w = 0.5 * two_area;
        for (int k : {i0, i1, i2}) {
            acc.row(k) += w * grad.transpose();
            wsum(k) += w;
        }
    }

    for (Eigen::Index v = 0; v < nv; ++v) {
        Eigen::Vector3d gvec = acc.row(v) / wsum(v);
        const Eigen::Vector3d n = geom.normal.row(v);
        acc.row(v) = (gvec - n.dot(gvec) * n).transpose();
    }
    return acc;
}

ScalarField apply_L(const TriMesh& mesh, const SurfaceGeometry& geom, const ScalarField& u) {
    ScalarField lap = laplace_beltrami(mesh, geom, u);
    Eigen::MatrixX3d grad = tangential_gradient(mesh, geom, u);
    ScalarField out(mesh.vertex_count());
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
        const double drift = mesh.vertices.row(v).dot(grad.row(v));
        out(v) = lap(v) + geom.second_fund_norm_sq(v) * u(v) - 0.5 * drift + 0.5 * u(v);
    }
    return out;
}

double weighted_integral(const TriMesh& mesh, const SurfaceGeometry& geom, const ScalarField& u) {
    double sum = 0.0;
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
        sum += u(v) * geom.vertex_area(v) * geom.gaussian_weight(v);
    return sum;
}

double weighted_l2_interior(const TriMesh& mesh, const SurfaceGeometry& geom,
                            const ScalarField& field) {
    double sum = 0.0;
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
        if (!mesh.is_boundary_vertex(v))
            sum += field(v) * field(v) * geom.vertex_area(v) * geom.gaussian_weight(v);
    return std::sqrt(sum);
}

namespace {

double polygon_area(const std::vector<Eigen::Vector3d>& poly) {
    if (poly.size() < 3) return 0.0;
    Eigen::Vector3d acc = Eigen::Vector3d::Zero();
    for (size_t k = 1; k + 1 < poly.size(); ++k)
        acc += (poly[k] - poly[0]).cross(poly[k + 1] - poly[0]);
    return 0.5 * acc.norm();
}

// intersection parameters of segment a + t(b-a), t in (0,1), with the sphere
void segment_sphere_hits(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                         const Eigen::Vector3d& c, double R, std::vector<double>& ts) {
    ts.clear();
    const Eigen::Vector3d d = b - a, m = a - c;
    const double qa = d.squaredNorm();
    const double qb = 2.0 * m.dot(d);
    const double qc = m.squaredNorm() - R * R;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0 || qa == 0.0) return;
    const double s = std::sqrt(disc);
    for (double t : {(-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa)})
        if (t > 0.0 && t < 1.0) ts.push_back(t);
    std::sort(ts.begin(), ts.end());
}

}  // namespace

double clipped_area(const TriMesh& mesh, const Eigen::Vector3d& center, double radius) {
    double area = 0.0;
    std::vector<double> ts;
    std::vector<Eigen::Vector3d> poly;
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
        Eigen::Vector3d p[3];
        bool in[3];
        int inside = 0;
        for (int k = 0; k < 3; ++k) {
            p[k] = mesh.vertices.row(mesh.triangles(t, k));
            in[k] = (p[k] - center).norm() <= radius;
            inside += in[k] ? 1 : 0;
        }
        if (inside == 3) {
            area += triangle_area(mesh, t);
            continue;
        }
        // walk the boundary, keeping inside corners and chord crossings
        poly.clear();
        for (int k = 0; k < 3; ++k) {
            const Eigen::Vector3d &a = p[k], &b = p[(k + 1) % 3];
            if (in[k]) poly.push_back(a);
            segment_sphere_hits(a, b, center, radius, ts);
            for (double tc : ts) poly.push_back(a + tc * (b - a));
        }
        area += polygon_area(poly);
    }
    return area;
}

double area_growth_ratio(const TriMesh& mesh, const std::vector<Eigen::Vector3d>& centers,
                         const std::vector<double>& radii) {
    double best = 0.0;
    for (const auto& c : centers) {
        for (double R : radii) {
            if (!(R > 0.0)) throw DimensionError("area_growth_ratio requires positive radii");
            best = std::max(best, clipped_area(mesh, c, R) / (R * R));
        }
    }
    return best;
}

}  // namespace shrinklab
