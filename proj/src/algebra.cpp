#include "sl2/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

constexpr double kSeriesRadius = 1e-4;
constexpr int kSeriesDegree = 7;

}  // namespace

double max_abs_diff(const Matrix2& x, const Matrix2& y) {
    return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

GroupElement make_group_element(double a, double b, double c, double d) {
    const Matrix2 m{a, b, c, d};
    const double det = m.det();
    if (!(det > 0.0) || !std::isfinite(det)) {
        throw NonUnimodular("matrix has non-positive determinant " + std::to_string(det));
    }
    if (std::abs(det - 1.0) <= kUnimodularTol) return m;
    return m * (1.0 / std::sqrt(det));
}

void require_unimodular(const Matrix2& g) {
    const double det = g.det();
    if (!(std::abs(det - 1.0) <= kUnimodularTol)) {
        throw NonUnimodular("determinant " + std::to_string(det) + " differs from 1");
    }
}

Matrix2 to_matrix(const AlgebraElement& x) { return {x.h, x.t + x.u, x.t - x.u, -x.h}; }

AlgebraElement from_matrix(const Matrix2& m) {
    return {0.5 * (m.a - m.d), 0.5 * (m.b + m.c), 0.5 * (m.b - m.c)};
}

Covector operator*(const Covector& p, const Mat3& m) {
    const Eigen::RowVector3d r = Eigen::RowVector3d(p.pH, p.pT, p.pU) * m;
    return {r(0), r(1), r(2)};
}

Eigen::Vector3d as_vector(const AlgebraElement& x) { return {x.h, x.t, x.u}; }

AlgebraElement from_vector(const Eigen::Vector3d& v) { return {v(0), v(1), v(2)}; }

double series_c(double z) {
    if (std::abs(z) < kSeriesRadius) {
        // Horner form of sum_{n<=7} z^n / (2n)!.
        double acc = 0.0;
        for (int n = kSeriesDegree; n >= 1; --n) {
            acc = (1.0 + acc) * z / ((2.0 * n) * (2.0 * n - 1.0));
        }
        return 1.0 + acc;
    }
    if (z > 0.0) return std::cosh(std::sqrt(z));
    return std::cos(std::sqrt(-z));
}

double series_s(double z) {
    if (std::abs(z) < kSeriesRadius) {
        double acc = 0.0;
        for (int n = kSeriesDegree; n >= 1; --n) {
            acc = (1.0 + acc) * z / ((2.0 * n + 1.0) * (2.0 * n));
        }
        return 1.0 + acc;
    }
    if (z > 0.0) {
        const double r = std::sqrt(z);
        return std::sinh(r) / r;
    }
    const double r = std::sqrt(-z);
    return std::sin(r) / r;
}

GroupElement exp_matrix(const AlgebraElement& x) {
    const double z = -x.det();
    const double c = series_c(z);
    const double s = series_s(z);
    const Matrix2 m = to_matrix(x);
    return {c + s * m.a, s * m.b, s * m.c, c + s * m.d};
}

Mat3 adjoint(const GroupElement& g) {
    require_unimodular(g);
    const double a = g.a, b = g.b, c = g.c, d = g.d;
    const double aa = a * a, bb = b * b, cc = c * c, dd = d * d;
    Mat3 m;
    m << a * d + b * c, -a * c + b * d, -a * c - b * d,
        -a * b + c * d, 0.5 * (aa - bb - cc + dd), 0.5 * (aa + bb - cc - dd),
        -a * b - c * d, 0.5 * (aa - bb + cc - dd), 0.5 * (aa + bb + cc + dd);
    return m;
}

Mat3 ad_rep(const AlgebraElement& x) {
    Mat3 m;
    m << 0.0, 2.0 * x.u, -2.0 * x.t,
        -2.0 * x.u, 0.0, 2.0 * x.h,
        -2.0 * x.t, 2.0 * x.h, 0.0;
    return m;
}

Mat3 exp_ad_pq(Nilpotent which, double tau) {
    const double q = 0.5 * tau * tau;
    Mat3 m;
    if (which == Nilpotent::P) {
        m << 1.0, tau, -tau,
            -tau, 1.0 - q, q,
            -tau, -q, 1.0 + q;
    } else {
        m << 1.0, -tau, -tau,
            tau, 1.0 - q, -q,
            -tau, q, 1.0 + q;
    }
    return m;
}

double casimir(const Covector& p) { return p.pH * p.pH + p.pT * p.pT - p.pU * p.pU; }

double hamiltonian(const Covector& p) { return -0.5 * (std::abs(p.pT) + std::abs(p.pU)); }

Covector face_flow(double pH0, double tau) {
    return {pH0 + 2.0 * tau, -tau * (pH0 + tau), tau * tau + pH0 * tau + 2.0};
}

QpqRewrite qpq_rewrite(double r, double s) {
    const double x2 = s + r * (1.0 - s * s);
    if (std::abs(x2) < 1e-12) {
        throw DegeneratePivot("qpq_rewrite: s + r(1 - s^2) vanishes");
    }
    return {-s * s / x2, x2, -r * s / x2};
}

}  // namespace sl2
