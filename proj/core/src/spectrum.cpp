#include "shrinklab/spectrum.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "shrinklab/errors.hpp"

namespace shrinklab {

namespace {

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * std::numbers::pi);
    if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
    if (a > std::numbers::pi) a -= 2.0 * std::numbers::pi;
    return a;
}

}  // namespace

Eigen::VectorXd profile_curvature(const ProfileCurve& profile) {
    const Eigen::Index m = profile.sample_count();
    Eigen::VectorXd kappa(m);
    auto seg = [&](Eigen::Index a, Eigen::Index b) {
        return std::hypot(profile.r(b) - profile.r(a), profile.z(b) - profile.z(a));
    };
    for (Eigen::Index i = 0; i < m; ++i) {
        Eigen::Index prev = i - 1, next = i + 1;
        if (profile.closed) {
            prev = (i + m - 1) % m;
            next = (i + 1) % m;
        } else if (i == 0) {
            prev = 0;
        } else if (i == m - 1) {
            next = m - 1;
        }
        const double ds = (prev == i ? 0.0 : seg(prev, i)) + (next == i ? 0.0 : seg(i, next));
        const double dth = wrap_angle(profile.theta(next) - profile.theta(prev));
        kappa(i) = dth / ds;
    }
    return kappa;
}

Eigen::VectorXd profile_second_fund_norm_sq(const ProfileCurve& profile) {
    const Eigen::VectorXd kappa = profile_curvature(profile);
    Eigen::VectorXd out(profile.sample_count());
    for (Eigen::Index i = 0; i < profile.sample_count(); ++i) {
        const double rot = std::sin(profile.theta(i)) / profile.r(i);
        out(i) = kappa(i) * kappa(i) + rot * rot;
    }
    return out;
}

SpectrumResult profile_spectrum(const ProfileCurve& profile, int fourier_mode, int count,
                                double truncation_z) {
    if (fourier_mode < 0) throw Error("angular mode must be >= 0");
    if (count < 1) throw Error("need at least one eigenvalue");
    if (!(truncation_z > 0.0)) throw Error("truncation must be positive");

    const Eigen::VectorXd a_sq_full = profile_second_fund_norm_sq(profile);

    // restrict open profiles to |z| <= truncation_z
    std::vector<Eigen::Index> keep;
    bool truncated = false;
    for (Eigen::Index i = 0; i < profile.sample_count(); ++i) {
        if (profile.closed || std::abs(profile.z(i)) <= truncation_z)
            keep.push_back(i);
        else
            truncated = true;
    }
    if (truncated && std::exp(-0.25 * truncation_z * truncation_z) >= 1e-10)
        throw Error("truncation |z| <= " + std::to_string(truncation_z) +
                    " is too small for the Gaussian weight to localize the spectrum");
    const Eigen::Index n = static_cast<Eigen::Index>(keep.size());
    if (n < 3) throw Error("profile too short after truncation");

    Eigen::VectorXd r(n), z(n), a_sq(n), s(n);
    s(0) = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        r(i) = profile.r(keep[static_cast<size_t>(i)]);
        z(i) = profile.z(keep[static_cast<size_t>(i)]);
        a_sq(i) = a_sq_full(keep[static_cast<size_t>(i)]);
        if (i > 0) s(i) = s(i - 1) + std::hypot(r(i) - r(i - 1), z(i) - z(i - 1));
    }

    // Dirichlet flags at the ends of open domains. Cut or free ends are
    // clamped; axis poles (r ~ 0) keep the natural condition for k = 0 where
    // the true eigenfunctions have vanishing flux.
    std::vector<char> clamped(static_cast<size_t>(n), 0);
    if (!profile.closed) {
        const double pole_tol = 0.02 * r.maxCoeff();
        for (Eigen::Index end : {Eigen::Index(0), n - 1}) {
            const bool pole = r(end) < pole_tol;
            if (!pole || fourier_mode >= 1) clamped[static_cast<size_t>(end)] = 1;
        }
    }

    std::vector<Eigen::Index> dof(static_cast<size_t>(n), -1);
    Eigen::Index ndof = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        if (!clamped[static_cast<size_t>(i)]) dof[static_cast<size_t>(i)] = ndof++;
    if (count > ndof) throw Error("asked for more eigenvalues than degrees of freedom");

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(ndof, ndof);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(ndof, ndof);

    const double g1 = 0.5 - 0.5 / std::sqrt(3.0);  // 2-point Gauss on [0,1]
    const double g2 = 0.5 + 0.5 / std::sqrt(3.0);
    const Eigen::Index elements = profile.closed ? n : n - 1;
    for (Eigen::Index e = 0; e < elements; ++e) {
        const Eigen::Index i0 = e, i1 = (e + 1) % n;
        const double h = (i1 == 0) ? std::hypot(r(i1) - r(i0), z(i1) - z(i0))
                                   : s(i1) - s(i0);
        double k_e = 0.0;            // integral of w over the element
        double p00 = 0, p01 = 0, p11 = 0, m00 = 0, m01 = 0, m11 = 0;
        for (double gx : {g1, g2}) {
            const double gw = 0.5 * h;
            const double rr = (1.0 - gx) * r(i0) + gx * r(i1);
            const double zz = (1.0 - gx) * z(i0) + gx * z(i1);
            const double aa = (1.0 - gx) * a_sq(i0) + gx * a_sq(i1);
            const double w = rr * std::exp(-0.25 * (rr * rr + zz * zz));
            const double q = aa - fourier_mode * fourier_mode / (rr * rr) + 0.5;
            const double phi0 = 1.0 - gx, phi1 = gx;
            k_e += gw * w;
            p00 += gw * w * q * phi0 * phi0;
            p01 += gw * w * q * phi0 * phi1;
            p11 += gw * w * q * phi1 * phi1;
            m00 += gw * w * phi0 * phi0;
            m01 += gw * w * phi0 * phi1;
            m11 += gw * w * phi1 * phi1;
        }
        const double stiff = k_e / (h * h);
        const Eigen::Index d0 = dof[static_cast<size_t>(i0)], d1 = dof[static_cast<size_t>(i1)];
        if (d0 >= 0) {
            A(d0, d0) += stiff - p00;
            M(d0, d0) += m00;
        }
        if (d1 >= 0) {
            A(d1, d1) += stiff - p11;
            M(d1, d1) += m11;
        }
        if (d0 >= 0 && d1 >= 0) {
            A(d0, d1) += -stiff - p01;
            A(d1, d0) += -stiff - p01;
            M(d0, d1) += m01;
            M(d1, d0) += m01;
        }
    }

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(A, M);
    if (solver.info() != Eigen::Success)
        throw SolverError("generalized eigensolve failed on the profile operator");

    SpectrumResult out;
    out.eigenvalues = solver.eigenvalues().head(count);
    Eigen::MatrixXd modes = solver.eigenvectors().leftCols(count);

    // deterministic sign: largest-magnitude entry positive
    for (Eigen::Index c = 0; c < modes.cols(); ++c) {
        Eigen::Index imax;
        modes.col(c).cwiseAbs().maxCoeff(&imax);
        if (modes(imax, c) < 0.0) modes.col(c) = -modes.col(c);
    }

    const double a_scale = A.cwiseAbs().maxCoeff();
    double worst = 0.0;
    for (Eigen::Index c = 0; c < modes.cols(); ++c) {
        const double res = (A * modes.col(c) - out.eigenvalues(c) * (M * modes.col(c)))
                               .cwiseAbs()
                               .maxCoeff();
        const double scale = a_scale * modes.col(c).cwiseAbs().maxCoeff();
        worst = std::max(worst, res / scale);
    }
    out.max_eigen_residual = worst;
    if (worst > 1e-10)
        throw SolverError("eigenpair residual " + std::to_string(worst) + " exceeds 1e-10");

    const Eigen::MatrixXd gram = modes.transpose() * M * modes;
    out.orthonormality_residual =
        (gram - Eigen::MatrixXd::Identity(count, count)).cwiseAbs().maxCoeff();

    out.eigenfunctions = Eigen::MatrixXd::Zero(n, count);
    for (Eigen::Index i = 0; i < n; ++i)
        if (dof[static_cast<size_t>(i)] >= 0)
            out.eigenfunctions.row(i) = modes.row(dof[static_cast<size_t>(i)]);
    out.node_s = s;
    out.node_r = r;
    out.node_z = z;
    return out;
}

}  // namespace shrinklab
