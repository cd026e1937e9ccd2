#include "shrinklab/shooting.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "shrinklab/errors.hpp"

namespace shrinklab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

// wrap to (-pi, pi]
double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

}  // namespace

ShootingState profile_ode_rhs(const ShootingState& state, int dimension) {
    if (!(state.r > 0.0))
        throw AxisCrossingError("profile ODE evaluated at r = " + std::to_string(state.r));
    const double ct = std::cos(state.theta);
    const double st = std::sin(state.theta);
    ShootingState d;
    d.r = ct;
    d.z = st;
    d.theta = 0.5 * (state.r * st - state.z * ct) - (dimension - 1) * st / state.r;
    d.s = 1.0;
    return d;
}

ShootingState rk4_step(const ShootingState& y, double ds, int dimension) {
    auto add = [](const ShootingState& a, const ShootingState& b, double c) {
        return ShootingState{a.r + c * b.r, a.z + c * b.z, a.theta + c * b.theta, a.s + c * b.s};
    };
    const ShootingState k1 = profile_ode_rhs(y, dimension);
    const ShootingState k2 = profile_ode_rhs(add(y, k1, 0.5 * ds), dimension);
    const ShootingState k3 = profile_ode_rhs(add(y, k2, 0.5 * ds), dimension);
    const ShootingState k4 = profile_ode_rhs(add(y, k3, ds), dimension);
    ShootingState out = y;
    out.r += ds / 6.0 * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r);
    out.z += ds / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
    out.theta += ds / 6.0 * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta);
    out.s += ds;
    return out;
}

Orbit integrate_until_plane_return(const ShootingState& start, const OdeOptions& opts) {
    Orbit orbit;
    orbit.states.push_back(start);
    ShootingState cur = start;
    const double escape_sq = opts.escape_radius * opts.escape_radius;
    bool armed = false;  // set once the orbit has left the z = 0 plane
    long step_index = 0;

    while (cur.s - start.s < opts.max_arclength) {
        ShootingState next;
        try {
            next = rk4_step(cur, opts.step, opts.dimension);
        } catch (const AxisCrossingError&) {
            orbit.end = OrbitEnd::HitAxis;
            orbit.final = cur;
            return orbit;
        }
        ++step_index;

        if (next.r <= opts.axis_floor) {
            orbit.end = OrbitEnd::HitAxis;
            orbit.final = next;
            return orbit;
        }
        if (next.r * next.r + next.z * next.z > escape_sq) {
            orbit.end = OrbitEnd::Escaped;
            orbit.final = next;
            return orbit;
        }
        if (armed && cur.z * next.z <= 0.0 && cur.z != next.z) {
            // refine the crossing by bisection on the step fraction
            double lo = 0.0, hi = opts.step;
            ShootingState at_hi = next;
            for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                ShootingState probe = rk4_step(cur, mid, opts.dimension);
                if (cur.z * probe.z <= 0.0 && probe.z != cur.z) {
                    hi = mid;
                    at_hi = probe;
                } else {
                    lo = mid;
                }
            }
            orbit.end = OrbitEnd::ReturnedToPlane;
            orbit.final = at_hi;
            orbit.final.z = 0.0;
            orbit.states.push_back(orbit.final);
            return orbit;
        }
        if (!armed && std::abs(next.z) > 1e-12) armed = true;

        cur = next;
        if (step_index % opts.record_stride == 0) orbit.states.push_back(cur);
    }
    orbit.end = OrbitEnd::StepLimit;
    orbit.final = cur;
    return orbit;
}

std::optional<double> closure_defect(double r_start, const OdeOptions& opts) {
    OdeOptions scan = opts;
    scan.record_stride = 1 << 20;  // defect needs only the crossing state
    const Orbit orbit = integrate_until_plane_return({r_start, 0.0, kHalfPi, 0.0}, scan);
    if (orbit.end != OrbitEnd::ReturnedToPlane) return std::nullopt;
    return orbit.final.theta + kHalfPi;
}

namespace {

// full-loop closure error |r - r_start| + |theta - pi/2 mod 2pi| after two
// plane crossings
double full_loop_error(double r_start, const OdeOptions& opts) {
    OdeOptions quiet = opts;
    quiet.record_stride = 1 << 20;
    const ShootingState start{r_start, 0.0, kHalfPi, 0.0};
    const Orbit upper = integrate_until_plane_return(start, quiet);
    if (upper.end != OrbitEnd::ReturnedToPlane) return std::numeric_limits<double>::infinity();
    const Orbit lower = integrate_until_plane_return(upper.final, quiet);
    if (lower.end != OrbitEnd::ReturnedToPlane) return std::numeric_limits<double>::infinity();
    return std::abs(lower.final.r - r_start) + std::abs(wrap_angle(lower.final.theta - kHalfPi));
}

}  // namespace

ShootResult shoot_closed_profile(double r_lo, double r_hi, double tol, const OdeOptions& opts) {
    if (!(tol > 0.0)) throw Error("shooting tolerance must be positive");
    if (!(r_lo > 0.0) || !(r_hi > r_lo))
        throw BracketError("empty or invalid starting-radius range [" + std::to_string(r_lo) +
                           ", " + std::to_string(r_hi) + "]");

    // scan for a sign change of the closure defect
    const int scan_points = 48;
    double a = 0.0, b = 0.0, fa = 0.0, fb = 0.0;
    bool have_bracket = false;
    double prev_r = 0.0, prev_d = 0.0;
    bool have_prev = false;
    std::ostringstream diag;
    for (int i = 0; i < scan_points; ++i) {
        const double r0 = r_lo + (r_hi - r_lo) * i / (scan_points - 1);
        const auto d = closure_defect(r0, opts);
        diag << (i ? ", " : "") << r0 << ":" << (d ? std::to_string(*d) : "no-return");
        if (!d) {
            have_prev = false;
            continue;
        }
        if (have_prev && prev_d * (*d) <= 0.0) {
            a = prev_r;
            b = r0;
            fa = prev_d;
            fb = *d;
            have_bracket = true;
            break;
        }
        prev_r = r0;
        prev_d = *d;
        have_prev = true;
    }
    if (!have_bracket)
        throw BracketError("no sign change of the closure defect over [" + std::to_string(r_lo) +
                           ", " + std::to_string(r_hi) + "]; scan: " + diag.str());

    // bisection on the defect sign, finishing on the full-loop error
    double mid = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (a + b);
        const auto d = closure_defect(mid, opts);
        if (!d) throw BracketError("closure defect became undefined inside the bracket at r = " +
                                   std::to_string(mid));
        if ((*d == 0.0) || full_loop_error(mid, opts) < tol) break;
        if (fa * (*d) <= 0.0) {
            b = mid;
            fb = *d;
        } else {
            a = mid;
            fa = *d;
        }
        if (b - a < 1e-15 * std::max(1.0, b)) break;
    }

    const double err = full_loop_error(mid, opts);
    if (!(err < tol))
        throw BracketError("bisection converged to r = " + std::to_string(mid) +
                           " but the closure error " + std::to_string(err) +
                           " does not meet tol " + std::to_string(tol));

    // sample the upper half and mirror it across z = 0 into a closed loop
    const Orbit upper = integrate_until_plane_return({mid, 0.0, kHalfPi, 0.0}, opts);
    const auto& st = upper.states;
    const size_t n_up = st.size();
    std::vector<size_t> keep;
    const size_t target = 600;  // per half; revolved meshes stay tractable
    const size_t stride = std::max<size_t>(1, (n_up - 1) / target);
    for (size_t k = 0; k + 1 < n_up; k += stride) keep.push_back(k);
    keep.push_back(n_up - 1);

    const Eigen::Index m = static_cast<Eigen::Index>(2 * keep.size() - 2);
    Eigen::VectorXd r(m), z(m), theta(m);
    for (size_t i = 0; i < keep.size(); ++i) {
        r(static_cast<Eigen::Index>(i)) = st[keep[i]].r;
        z(static_cast<Eigen::Index>(i)) = st[keep[i]].z;
        theta(static_cast<Eigen::Index>(i)) = st[keep[i]].theta;
    }
    for (size_t i = keep.size(); i < static_cast<size_t>(m); ++i) {
        const auto& src = st[keep[2 * keep.size() - 2 - i]];
        r(static_cast<Eigen::Index>(i)) = src.r;
        z(static_cast<Eigen::Index>(i)) = -src.z;
        theta(static_cast<Eigen::Index>(i)) = kPi - src.theta;
    }

    ShootResult result;
    result.profile = make_profile(std::move(r), std::move(z), std::move(theta), true);
    result.r_inner = mid;
    result.r_outer = upper.final.r;
    result.closure_error = err;
    return result;
}

}  // namespace shrinklab
