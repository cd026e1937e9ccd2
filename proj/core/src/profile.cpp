#include "shrinklab/profile.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "shrinklab/errors.hpp"

namespace shrinklab {

ProfileCurve make_profile(Eigen::VectorXd r, Eigen::VectorXd z, Eigen::VectorXd theta,
                          bool closed) {
    const Eigen::Index m = r.size();
    if (m < 2) throw DegeneracyError("profile needs at least two samples");
    if (z.size() != m || theta.size() != m)
        throw DegeneracyError("profile component lengths disagree");
    for (Eigen::Index i = 0; i < m; ++i)
        if (!(r(i) > 0.0))
            throw AxisCrossingError("profile sample " + std::to_string(i) + " has r <= 0");
    const Eigen::Index last_pair = closed ? m : m - 1;
    for (Eigen::Index i = 0; i < last_pair; ++i) {
        const Eigen::Index j = (i + 1) % m;
        if (r(i) == r(j) && z(i) == z(j))
            throw DegeneracyError("profile samples " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide");
    }
    ProfileCurve p;
    p.r = std::move(r);
    p.z = std::move(z);
    p.theta = std::move(theta);
    p.closed = closed;
    return p;
}

Eigen::VectorXd profile_arclength(const ProfileCurve& profile) {
    const Eigen::Index m = profile.sample_count();
    const Eigen::Index n = profile.closed ? m + 1 : m;
    Eigen::VectorXd s(n);
    s(0) = 0.0;
    for (Eigen::Index i = 1; i < n; ++i) {
        const Eigen::Index a = i - 1, b = i % m;
        const double dr = profile.r(b) - profile.r(a);
        const double dz = profile.z(b) - profile.z(a);
        s(i) = s(i - 1) + std::hypot(dr, dz);
    }
    return s;
}

ProfileCurve sphere_profile(double radius, int samples) {
    Eigen::VectorXd r(samples), z(samples), theta(samples);
    const double len = std::numbers::pi * radius;
    for (int k = 0; k < samples; ++k) {
        const double s = (k + 0.5) * len / samples;  // half a step clear of each pole
        const double a = s / radius;
        r(k) = radius * std::sin(a);
        z(k) = -radius * std::cos(a);
        theta(k) = a;
    }
    return make_profile(std::move(r), std::move(z), std::move(theta), false);
}

ProfileCurve cylinder_profile(double radius, double half_length, int samples) {
    Eigen::VectorXd r = Eigen::VectorXd::Constant(samples, radius);
    Eigen::VectorXd z(samples), theta(samples);
    for (int k = 0; k < samples; ++k) {
        z(k) = -half_length + 2.0 * half_length * k / (samples - 1);
        theta(k) = std::numbers::pi / 2.0;
    }
    return make_profile(std::move(r), std::move(z), std::move(theta), false);
}

TriMesh revolve(const ProfileCurve& profile, int angular_resolution) {
    if (angular_resolution < 8) throw Error("angular resolution must be >= 8");
    const Eigen::Index m = profile.sample_count();
    const int K = angular_resolution;
    const double two_pi = 2.0 * std::numbers::pi;

    Eigen::MatrixX3d v(m * K, 3);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (int j = 0; j < K; ++j) {
            const double phi = two_pi * j / K;
            v.row(i * K + j) << profile.r(i) * std::cos(phi), profile.r(i) * std::sin(phi),
                profile.z(i);
        }
    }

    const Eigen::Index bands = profile.closed ? m : m - 1;
    Eigen::MatrixX3i f(2 * bands * K, 3);
    Eigen::Index t = 0;
    for (Eigen::Index i = 0; i < bands; ++i) {
        const Eigen::Index in = (i + 1) % m;
        for (int j = 0; j < K; ++j) {
            const int jn = (j + 1) % K;
            const int a = static_cast<int>(i * K + j);
            const int b = static_cast<int>(i * K + jn);
            const int c = static_cast<int>(in * K + jn);
            const int d = static_cast<int>(in * K + j);
            f.row(t++) << a, b, c;
            f.row(t++) << a, c, d;
        }
    }
    return make_mesh(std::move(v), std::move(f));
}

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

void write_profile_csv(std::ostream& out, const ProfileCurve& profile) {
    const Eigen::VectorXd s = profile_arclength(profile);
    out << "s,r,z,theta\n";
    for (Eigen::Index i = 0; i < profile.sample_count(); ++i)
        out << fmt(s(i)) << "," << fmt(profile.r(i)) << "," << fmt(profile.z(i)) << ","
            << fmt(profile.theta(i)) << "\n";
}

void write_profile_csv_file(const std::string& path, const ProfileCurve& profile) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_profile_csv(out, profile);
}

ProfileCurve read_profile_csv(std::istream& in, bool closed) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty profile CSV");
    std::vector<double> rs, zs, thetas;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        double s, r, z, theta;
        char comma;
        if (!(ls >> s >> comma >> r >> comma >> z >> comma >> theta))
            throw IoError("malformed profile CSV line: " + line);
        rs.push_back(r);
        zs.push_back(z);
        thetas.push_back(theta);
    }
    const Eigen::Index m = static_cast<Eigen::Index>(rs.size());
    return make_profile(Eigen::Map<Eigen::VectorXd>(rs.data(), m),
                        Eigen::Map<Eigen::VectorXd>(zs.data(), m),
                        Eigen::Map<Eigen::VectorXd>(thetas.data(), m), closed);
}

}  // namespace shrinklab
