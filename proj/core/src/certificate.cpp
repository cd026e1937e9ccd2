#include "shrinklab/certificate.hpp"

#include <cmath>
#include <numbers>

#include "shrinklab/errors.hpp"
#include "shrinklab/quadrature.hpp"
#include "shrinklab/stability.hpp"

namespace shrinklab {

namespace {

constexpr double kPi = std::numbers::pi;

double ramp(double t, double R) {
    if (t <= R) return 1.0;
    if (t >= R + 1.0) return 0.0;
    return R + 1.0 - t;
}

double ramp_slope(double t, double R) { return (t > R && t < R + 1.0) ? -1.0 : 0.0; }

CertificateReport plane_certificate(double R) {
    CertificateReport rep;
    rep.R = R;
    // v = 1, |A|^2 = 0; everything is radial
    auto weight = [](double r) { return std::exp(-0.25 * r * r) * 2.0 * kPi * r; };
    rep.tail_term = integrate_gaussian_tail([&](double r) { return weight(r); }, R, 4.0);
    rep.core_term = 0.5 * integrate([&](double r) { return weight(r); }, 0.0, R,
                                    64 + static_cast<int>(8 * R));
    rep.bound = rep.tail_term - rep.core_term;
    rep.form_value = integrate(
        [&](double r) {
            const double e = ramp(r, R);
            const double de = ramp_slope(r, R);
            return (de * de - 0.5 * e * e) * weight(r);
        },
        0.0, R + 1.0, 128 + static_cast<int>(8 * R));
    return rep;
}

CertificateReport sphere_certificate(double R) {
    // radius-2 sphere: |x| = 2, |A|^2 = 1/2, v = cos(polar angle from p)
    CertificateReport rep;
    rep.R = R;
    const double radius = 2.0;
    const double w = std::exp(-0.25 * radius * radius);
    // integral of v^2 dmu and of |grad v|^2 = (1 - v^2)/radius^2 dmu
    const double v2 = integrate(
        [&](double a) {
            const double c = std::cos(a);
            return 2.0 * kPi * radius * radius * c * c * std::sin(a);
        },
        0.0, kPi, 64);
    const double grad2 = integrate(
        [&](double a) {
            const double c = std::cos(a);
            return 2.0 * kPi * (1.0 - c * c) * std::sin(a);
        },
        0.0, kPi, 64);
    const bool inside = radius <= R;
    rep.tail_term = inside ? 0.0 : v2 * w;
    rep.core_term = inside ? 0.5 * v2 * w : 0.0;
    rep.bound = rep.tail_term - rep.core_term;
    const double eta = ramp(radius, R);
    rep.form_value = eta * eta * w * (grad2 - (0.5 + 0.5) * v2);
    return rep;
}

CertificateReport cylinder_certificate(double R) {
    // radius sqrt(2) about the z-axis, base point on the z = 0 circle, so
    // v = cos(phi); |x|^2 = 2 + z^2 and angular integrals give a factor pi
    CertificateReport rep;
    rep.R = R;
    const double rad = std::sqrt(2.0);
    const double pref = 2.0 * rad * kPi * std::exp(-0.5);  // both z signs
    auto gauss = [](double z) { return std::exp(-0.25 * z * z); };

    const double z_R = R * R > 2.0 ? std::sqrt(R * R - 2.0) : 0.0;
    rep.tail_term = pref * integrate_gaussian_tail(gauss, z_R, 4.0);
    rep.core_term = z_R > 0.0 ? 0.5 * pref * integrate(gauss, 0.0, z_R, 64 + static_cast<int>(8 * z_R))
                              : 0.0;
    rep.bound = rep.tail_term - rep.core_term;

    // symmetric form of u = eta(|x|) cos(phi):
    //   |grad u|^2 = eta^2 sin^2/2 + eta'^2 cos^2 z^2/(2+z^2),
    //   (|A|^2 + 1/2) u^2 = eta^2 cos^2
    const double z_out = std::sqrt((R + 1.0) * (R + 1.0) - 2.0);
    rep.form_value = pref / 2.0 *
                     integrate(
                         [&](double z) {
                             const double ax = std::sqrt(2.0 + z * z);
                             const double e = ramp(ax, R);
                             const double de = ramp_slope(ax, R);
                             return gauss(z) *
                                    (de * de * z * z / (2.0 + z * z) - 0.5 * e * e);
                         },
                         0.0, z_out, 128 + static_cast<int>(8 * z_out));
    return rep;
}

}  // namespace

CertificateReport instability_certificate(CertModel model, double R) {
    if (!(R > 0.0)) throw Error("cutoff radius must be positive");
    switch (model) {
        case CertModel::Plane: return plane_certificate(R);
        case CertModel::Sphere: return sphere_certificate(R);
        case CertModel::Cylinder: return cylinder_certificate(R);
    }
    throw Error("unreachable certificate model");
}

CertificateReport instability_certificate(const TriMesh& mesh, const SurfaceGeometry& geom,
                                          double R, std::optional<Eigen::Index> base_vertex) {
    if (!(R > 0.0)) throw Error("cutoff radius must be positive");

    Eigen::Index p = 0;
    if (base_vertex) {
        p = *base_vertex;
    } else {
        mesh.vertices.rowwise().squaredNorm().minCoeff(&p);
    }

    const Eigen::Vector3d np = geom.normal.row(p);
    ScalarField u(mesh.vertex_count());
    CertificateReport rep;
    rep.R = R;
    for (Eigen::Index i = 0; i < mesh.vertex_count(); ++i) {
        const double v = np.dot(geom.normal.row(i));
        const double ax = mesh.vertices.row(i).norm();
        u(i) = ramp(ax, R) * v;
        const double mass = v * v * geom.vertex_area(i) * geom.gaussian_weight(i);
        if (ax > R)
            rep.tail_term += mass;
        else
            rep.core_term += 0.5 * mass;
    }
    rep.bound = rep.tail_term - rep.core_term;
    rep.form_value = quadratic_form(mesh, geom, u).value;
    return rep;
}

double certificate_threshold_radius(CertModel model, double lo, double hi, double tol_R) {
    double flo = instability_certificate(model, lo).bound;
    double fhi = instability_certificate(model, hi).bound;
    if (flo * fhi > 0.0)
        throw BracketError("certificate bound does not change sign on [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
    while (hi - lo > tol_R) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = instability_certificate(model, mid).bound;
        if (flo * fmid <= 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace shrinklab
