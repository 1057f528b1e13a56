#include "sl2/cover.hpp"

#include <algorithm>
#include <cmath>

namespace sl2 {

namespace {

/// asinh(x)/x, continuous at 0.
double asinhc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0 + 3.0 * x * x * x * x / 40.0;
    return std::asinh(x) / x;
}

/// rho/sinh(rho), continuous at 0.
double rho_over_sinh(double rho) {
    if (std::abs(rho) < 1e-4) return 1.0 - rho * rho / 6.0 + 7.0 * rho * rho * rho * rho / 360.0;
    return rho / std::sinh(rho);
}

double sign(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

double wrap_angle(double u) {
    double r = std::remainder(u, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

GroupElement cover_map(const CoverElement& x) {
    const double z = x.h * x.h + x.t * x.t;
    const double c = series_c(z);
    const double s = series_s(z);
    const double cu = std::cos(x.u), su = std::sin(x.u);
    return {c * cu + s * x.h, c * su + s * x.t, -c * su + s * x.t, c * cu - s * x.h};
}

namespace {

/// Local inverse without the unimodularity check; callers pass products of
/// unimodular matrices whose determinant drifted by roundoff only.
CoverElement local_inverse(const GroupElement& g) {
    const double tr = g.a + g.d;
    const double skew = g.b - g.c;
    double u = std::atan2(skew, tr);
    if (u == -kPi) u = kPi;
    const double arg = std::max(1.0, 0.5 * std::hypot(tr, skew));
    const double rho = std::acosh(arg);
    const double k = 0.5 * rho_over_sinh(rho);
    return {k * (g.a - g.d), k * (g.b + g.c), u};
}

}  // namespace

CoverElement cover_inv(const GroupElement& g) {
    require_unimodular(g);
    return local_inverse(g);
}

CoverElement rotate_u(const CoverElement& x, double a) {
    const double c = std::cos(2.0 * a), s = std::sin(2.0 * a);
    return {x.h * c + x.t * s, -x.h * s + x.t * c, x.u};
}

CoverElement compose(const CoverElement& x, const CoverElement& y) {
    // x = (u1 U) o e1 and y = e2 o (u2 U) with e1, e2 in the symmetric plane.
    const CoverElement e1 = rotate_u({x.h, x.t, 0.0}, -0.5 * x.u);
    const CoverElement e2 = rotate_u({y.h, y.t, 0.0}, 0.5 * y.u);
    // Products of two positive definite symmetric matrices have positive
    // trace, so the local inverse picks the correct sheet.
    const CoverElement m = local_inverse(cover_map(e1) * cover_map(e2));
    const CoverElement r = rotate_u(m, 0.5 * (x.u - y.u));
    return {r.h, r.t, m.u + x.u + y.u};
}

CoverElement exp_tilde(const AlgebraElement& x) {
    const double rho0 = std::hypot(x.h, x.t);
    const double u0 = x.u;
    const double k = rho0 * rho0 - u0 * u0;
    const double c = series_c(k);
    const double s = series_s(k);
    const double scale = s * asinhc(rho0 * s);
    double u;
    if (k >= 0.0) {
        u = std::atan(u0 * s / c);
    } else {
        const double theta = std::sqrt(-k);
        const double turns = std::floor(0.5 + theta / kPi);
        if (c == 0.0) {
            u = sign(u0) * theta;
        } else {
            u = std::atan(u0 * s / c) + sign(u0) * turns * kPi;
        }
    }
    return {scale * x.h, scale * x.t, u};
}

}  // namespace sl2
