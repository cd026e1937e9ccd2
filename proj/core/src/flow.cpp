#include "shrinklab/flow.hpp"

#include <Eigen/Geometry>
#include <Eigen/Sparse>
#include <cmath>
#include <limits>
#include <vector>

#include "shrinklab/errors.hpp"

namespace shrinklab {

double stable_timestep(const TriMesh& mesh, double safety) {
    const double h = min_edge_length(mesh);
    return safety * h * h;
}

FlowState mcf_step(const FlowState& state, double dt, FlowScheme scheme) {
    if (!(dt > 0.0)) throw TimestepError("time step must be positive");
    const TriMesh& mesh = state.mesh;
    const SurfaceGeometry geom = compute_geometry(mesh);

    Eigen::MatrixX3d moved = mesh.vertices;
    if (scheme == FlowScheme::Explicit) {
        const double bound = stable_timestep(mesh, 0.25);
        if (dt > bound * (1.0 + 1e-12))
            throw TimestepError("explicit step " + std::to_string(dt) +
                                " exceeds the stability bound " + std::to_string(bound));
        for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
            if (mesh.is_boundary_vertex(v)) continue;
            moved.row(v) -= dt * geom.mean_curvature(v) * geom.normal.row(v);
        }
    } else {
        // (M + dt K) x_new = M x_old with the cotangent stiffness K frozen
        using Triplet = Eigen::Triplet<double>;
        std::vector<Triplet> trip;
        trip.reserve(static_cast<size_t>(12 * mesh.triangle_count()));
        const Eigen::Index nv = mesh.vertex_count();
        Eigen::VectorXd diag = Eigen::VectorXd::Zero(nv);

        for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t) {
            const int id[3] = {mesh.triangles(t, 0), mesh.triangles(t, 1), mesh.triangles(t, 2)};
            const Eigen::Vector3d p[3] = {mesh.vertices.row(id[0]), mesh.vertices.row(id[1]),
                                          mesh.vertices.row(id[2])};
            for (int k = 0; k < 3; ++k) {
                const int a = id[(k + 1) % 3], b = id[(k + 2) % 3];
                const Eigen::Vector3d u = p[(k + 1) % 3] - p[k], w = p[(k + 2) % 3] - p[k];
                const double cot = u.dot(w) / u.cross(w).norm();
                const double c = 0.5 * cot;
                if (!mesh.is_boundary_vertex(a)) {
                    trip.emplace_back(a, b, -dt * c);
                    diag(a) += dt * c;
                }
                if (!mesh.is_boundary_vertex(b)) {
                    trip.emplace_back(b, a, -dt * c);
                    diag(b) += dt * c;
                }
            }
        }
        for (Eigen::Index v = 0; v < nv; ++v) {
            if (mesh.is_boundary_vertex(v))
                trip.emplace_back(v, v, 1.0);
            else
                trip.emplace_back(v, v, geom.vertex_area(v) + diag(v));
        }
        Eigen::SparseMatrix<double> A(nv, nv);
        A.setFromTriplets(trip.begin(), trip.end());
        Eigen::SparseLU<Eigen::SparseMatrix<double>> solver(A);
        if (solver.info() != Eigen::Success)
            throw SolverError("semi-implicit step: factorization failed");

        Eigen::MatrixX3d rhs = mesh.vertices;
        for (Eigen::Index v = 0; v < nv; ++v)
            if (!mesh.is_boundary_vertex(v)) rhs.row(v) *= geom.vertex_area(v);
        moved = solver.solve(rhs);
        if (solver.info() != Eigen::Success)
            throw SolverError("semi-implicit step: solve failed");
    }

    FlowState next;
    const double max_disp = (moved - mesh.vertices).rowwise().norm().maxCoeff();
    next.embedded_hint = state.embedded_hint && max_disp < 0.5 * min_edge_length(mesh);
    next.mesh = make_mesh(std::move(moved), mesh.triangles);
    next.t = state.t + dt;
    next.step_count = state.step_count + 1;
    return next;
}

FlowState flow_to(FlowState state, double t_end, FlowScheme scheme, double safety,
                  double dt_cap) {
    while (state.t < t_end - 1e-14) {
        double dt = std::min(dt_cap, t_end - state.t);
        if (scheme == FlowScheme::Explicit) dt = std::min(dt, stable_timestep(state.mesh, safety));
        state = mcf_step(state, dt, scheme);
    }
    return state;
}

double selfsimilar_residual(const TriMesh& sigma, double t) {
    if (!(t < 0.0)) throw TimeDomainError("self-similar slices exist for t < 0 only");
    const TriMesh slice = scaled(sigma, std::sqrt(-t));
    const SurfaceGeometry geom = compute_geometry(slice);
    ScalarField res(slice.vertex_count());
    for (Eigen::Index v = 0; v < slice.vertex_count(); ++v)
        res(v) = geom.mean_curvature(v) +
                 slice.vertices.row(v).dot(geom.normal.row(v)) / (2.0 * t);
    return interior_max_abs(slice, res);
}

double collar_hausdorff(const TriMesh& from, const TriMesh& to, double collar) {
    std::vector<Eigen::Vector3d> from_bnd, to_bnd;
    for (Eigen::Index v = 0; v < from.vertex_count(); ++v)
        if (from.is_boundary_vertex(v)) from_bnd.push_back(from.vertices.row(v));
    for (Eigen::Index v = 0; v < to.vertex_count(); ++v)
        if (to.is_boundary_vertex(v)) to_bnd.push_back(to.vertices.row(v));

    auto near_set = [](const std::vector<Eigen::Vector3d>& set, const Eigen::Vector3d& p,
                       double d) {
        for (const auto& q : set)
            if ((p - q).norm() < d) return true;
        return false;
    };

    double worst = 0.0;
    for (Eigen::Index v = 0; v < from.vertex_count(); ++v) {
        const Eigen::Vector3d p = from.vertices.row(v);
        if (near_set(from_bnd, p, collar)) continue;
        const Eigen::Vector3d q = closest_mesh_point(to, p);
        if (near_set(to_bnd, q, collar)) continue;  // projection fell off the truncated part
        worst = std::max(worst, (p - q).norm());
    }
    return worst;
}

double rescaled_trajectory_check(const TriMesh& sigma, double t0, double t1, int steps,
                                 double collar) {
    if (!(-1.0 <= t0 && t0 < t1 && t1 < 0.0))
        throw TimeDomainError("need -1 <= t0 < t1 < 0");
    if (steps < 1) throw TimestepError("need at least one step");

    FlowState state;
    state.mesh = scaled(sigma, std::sqrt(-t0));
    state.t = t0;
    const double dt = (t1 - t0) / steps;
    for (int k = 0; k < steps; ++k) state = mcf_step(state, dt, FlowScheme::Explicit);

    const TriMesh target = scaled(sigma, std::sqrt(-t1));
    return std::max(collar_hausdorff(state.mesh, target, collar),
                    collar_hausdorff(target, state.mesh, collar));
}

}  // namespace shrinklab
