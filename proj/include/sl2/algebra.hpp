#pragma once

#include <Eigen/Core>
#include <numbers>

namespace sl2 {

inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kUnimodularTol = 1e-9;

/// Element hH + tT + uU of sl(2). Also used as a point of the simply
/// connected cover, which is identified with sl(2) as a set.
struct AlgebraElement {
    double h = 0.0;
    double t = 0.0;
    double u = 0.0;

    /// det(hH + tT + uU) = -h^2 - t^2 + u^2.
    double det() const { return -h * h - t * t + u * u; }

    AlgebraElement operator+(const AlgebraElement& o) const { return {h + o.h, t + o.t, u + o.u}; }
    AlgebraElement operator-(const AlgebraElement& o) const { return {h - o.h, t - o.t, u - o.u}; }
    AlgebraElement operator-() const { return {-h, -t, -u}; }
    AlgebraElement operator*(double k) const { return {k * h, k * t, k * u}; }
    friend AlgebraElement operator*(double k, const AlgebraElement& x) { return x * k; }
};

inline constexpr AlgebraElement kH{1.0, 0.0, 0.0};
inline constexpr AlgebraElement kT{0.0, 1.0, 0.0};
inline constexpr AlgebraElement kU{0.0, 0.0, 1.0};
inline constexpr AlgebraElement kP{0.0, 0.5, 0.5};
inline constexpr AlgebraElement kQ{0.0, 0.5, -0.5};

/// Real 2x2 matrix [[a, b], [c, d]]. Group elements are matrices with unit
/// determinant; tangent vectors reuse the same storage.
struct Matrix2 {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    Matrix2 operator*(const Matrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Matrix2 operator+(const Matrix2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Matrix2 operator-(const Matrix2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Matrix2 operator-() const { return {-a, -b, -c, -d}; }
    Matrix2 operator*(double k) const { return {k * a, k * b, k * c, k * d}; }

    /// Adjugate; equals the inverse for unimodular matrices.
    Matrix2 adjugate() const { return {d, -b, -c, a}; }

    static Matrix2 identity() { return {}; }
    static Matrix2 zero() { return {0.0, 0.0, 0.0, 0.0}; }
};

using GroupElement = Matrix2;

/// Max-norm distance between two matrices.
double max_abs_diff(const Matrix2& x, const Matrix2& y);

/// Builds a group element from raw entries: det <= 0 is rejected,
/// any other determinant is scaled away by dividing by sqrt(det).
GroupElement make_group_element(double a, double b, double c, double d);

/// Throws NonUnimodular if |det(g) - 1| > kUnimodularTol.
void require_unimodular(const Matrix2& g);

/// Matrix of hH + tT + uU, i.e. [[h, t+u], [t-u, -h]].
Matrix2 to_matrix(const AlgebraElement& x);

/// Coordinates of the traceless part of m.
AlgebraElement from_matrix(const Matrix2& m);

/// Dual coordinates (pH, pT, pU); acts on the right of 3x3 matrices.
struct Covector {
    double pH = 0.0;
    double pT = 0.0;
    double pU = 0.0;
};

using Mat3 = Eigen::Matrix3d;

Covector operator*(const Covector& p, const Mat3& m);
Eigen::Vector3d as_vector(const AlgebraElement& x);
AlgebraElement from_vector(const Eigen::Vector3d& v);

/// C(z) = sum z^n/(2n)!, i.e. cosh(sqrt z) for z >= 0 and cos(sqrt(-z)) otherwise.
double series_c(double z);
/// S(z) = sum z^n/(2n+1)!, i.e. sinh(sqrt z)/sqrt z resp. sin(sqrt(-z))/sqrt(-z).
double series_s(double z);

/// exp(X) = C(z) I + S(z) X with z = -det X.
GroupElement exp_matrix(const AlgebraElement& x);

/// Ad(g) in the basis {H, T, U}, acting on column coordinate vectors.
Mat3 adjoint(const GroupElement& g);

/// ad(X) in the basis {H, T, U}.
Mat3 ad_rep(const AlgebraElement& x);

enum class Nilpotent { P, Q };

/// Closed form of exp(tau ad P) resp. exp(tau ad Q); ad P and ad Q are nilpotent of order 3.
Mat3 exp_ad_pq(Nilpotent which, double tau);

double casimir(const Covector& p);
double hamiltonian(const Covector& p);

/// (pH0, 0, 2) exp(-tau ad P) in closed form.
Covector face_flow(double pH0, double tau);

struct QpqRewrite {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
};

/// Coefficients with exp(rP)exp(-sQ)exp(sP) = exp(x1 Q)exp(x2 P)exp(x3 Q).
QpqRewrite qpq_rewrite(double r, double s);

}  // namespace sl2
