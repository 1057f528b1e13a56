#pragma once

// Independent reference computations shared by the tests.

#include <cmath>
#include <random>

#include "sl2/algebra.hpp"
#include "sl2/cover.hpp"

namespace sl2::testing {

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
inline Matrix2 taylor_exp(const Matrix2& x) {
    const double norm = std::max({std::abs(x.a), std::abs(x.b), std::abs(x.c), std::abs(x.d)});
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.125) {
        scale *= 0.5;
        ++squarings;
    }
    const Matrix2 y = x * scale;
    Matrix2 term = Matrix2::identity();
    Matrix2 sum = Matrix2::identity();
    for (int k = 1; k <= 20; ++k) {
        term = term * y * (1.0 / k);
        sum = sum + term;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

/// Coordinates of g X g^-1 computed by plain matrix products.
inline AlgebraElement conjugate(const Matrix2& g, const AlgebraElement& x) {
    return from_matrix(g * to_matrix(x) * g.adjugate());
}

inline double rel_diff(const Matrix2& x, const Matrix2& y) {
    const double scale = std::max({1.0, std::abs(y.a), std::abs(y.b), std::abs(y.c), std::abs(y.d)});
    return max_abs_diff(x, y) / scale;
}

inline double diff(const AlgebraElement& x, const AlgebraElement& y) {
    return std::max({std::abs(x.h - y.h), std::abs(x.t - y.t), std::abs(x.u - y.u)});
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
    AlgebraElement algebra(double bound) { return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)}; }
    /// Group element cover_map(X) with |coordinates| <= bound.
    Matrix2 group(double bound) { return cover_map(algebra(bound)); }
};

}  // namespace sl2::testing
