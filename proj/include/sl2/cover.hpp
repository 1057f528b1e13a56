#pragma once

#include "sl2/algebra.hpp"

namespace sl2 {

/// Point of the simply connected cover in (h, t, u) coordinates; all of R^3.
using CoverElement = AlgebraElement;

/// Covering map C(h^2+t^2) R(u) + S(h^2+t^2) [[h, t], [t, -h]].
GroupElement cover_map(const CoverElement& x);

/// Local inverse of cover_map with u in (-pi, pi].
CoverElement cover_inv(const GroupElement& g);

/// exp(a ad U) applied to x: rotates (h, t) by -2a, keeps u.
CoverElement rotate_u(const CoverElement& x, double a);

/// Group product of the cover.
CoverElement compose(const CoverElement& x, const CoverElement& y);

/// Exponential map of the cover, continuous in x.
CoverElement exp_tilde(const AlgebraElement& x);

/// Representative of u modulo 2 pi in (-pi, pi].
double wrap_angle(double u);

}  // namespace sl2
