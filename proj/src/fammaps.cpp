#include "sl2/fammaps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPivotTol = 1e-12;

Slot slot(Gen g, int sign, Param p) { return {g, sign, p}; }

MapDescriptor poly_map(MapName id, std::string name, std::vector<Slot> slots, OrbitGroup orbit,
                       std::optional<SymmetryOp> stab, std::array<double, 4> poly, double min_cost) {
    MapDescriptor m;
    m.id = id;
    m.name = std::move(name);
    m.slots = std::move(slots);
    m.orbit = orbit;
    m.stabilizer = stab;
    m.pivot = PivotKind::Polynomial;
    m.poly = poly;
    m.min_cost = min_cost;
    return m;
}

MapDescriptor hyp_map(MapName id, std::string name, std::vector<Slot> slots, OrbitGroup orbit,
                      std::optional<SymmetryOp> stab, double alpha, double beta, double min_cost) {
    MapDescriptor m;
    m.id = id;
    m.name = std::move(name);
    m.slots = std::move(slots);
    m.orbit = orbit;
    m.stabilizer = stab;
    m.pivot = PivotKind::Hyperbolic;
    m.alpha = alpha;
    m.beta = beta;
    m.min_cost = min_cost;
    return m;
}

std::vector<MapDescriptor> build_table() {
    using enum Gen;
    using enum Param;
    const auto G = OrbitGroup::Gamma;
    const auto GT = OrbitGroup::GammaTilde;
    const SymmetryOp iH{true, Axis::H}, iT{true, Axis::T}, iU{true, Axis::U};
    const double w = kSqrt2;
    std::vector<MapDescriptor> t;
    // Pivot entries of the middle factors (c = cosh(s/2), h = sinh(s/2)):
    // g21 for P...P, g22 for P...Q, g12 for Q...Q, g11 for Q...P.
    t.push_back(poly_map(MapName::A3, "A3", {slot(P, 1, R), slot(Q, -1, S), slot(P, 1, T)}, G, iH,
                         {0, -1, 0, 0}, 0.0));
    t.push_back(poly_map(MapName::A4, "A4",
                         {slot(P, 1, R), slot(Q, -1, S), slot(P, 1, S), slot(Q, -1, T)}, G, iT,
                         {1, 0, -1, 0}, 2.0));
    t.push_back(poly_map(MapName::A5, "A5",
                         {slot(P, 1, R), slot(Q, -1, S), slot(P, 1, S), slot(Q, -1, S), slot(P, 1, T)},
                         G, iH, {0, -2, 0, 1}, 3.0 * w));
    t.push_back(poly_map(MapName::C3, "C3", {slot(P, 1, R), slot(Q, 1, S), slot(P, -1, T)}, GT,
                         std::nullopt, {0, 1, 0, 0}, 0.0));
    t.push_back(poly_map(MapName::C4a, "C4a",
                         {slot(P, 1, R), slot(Q, -1, S), slot(P, -1, S), slot(Q, 1, T)}, G, iU,
                         {1, 0, 1, 0}, 0.0));
    t.push_back(poly_map(MapName::C4c, "C4c",
                         {slot(P, 1, R), slot(Q, 1, S), slot(P, -1, S), slot(Q, -1, T)}, G, iT,
                         {1, 0, -1, 0}, 0.0));
    t.push_back(hyp_map(MapName::S3P, "S3P", {slot(P, 1, R), slot(HalfT, 1, S), slot(P, 1, T)}, G, iH,
                        0.0, 1.0, 0.0));
    t.push_back(hyp_map(MapName::S3Q, "S3Q", {slot(P, 1, R), slot(HalfT, 1, S), slot(Q, 1, T)}, G, iU,
                        1.0, 0.0, 0.0));
    t.push_back(hyp_map(MapName::S4P, "S4P",
                        {slot(P, 1, R), slot(HalfT, 1, S), slot(P, 1, W), slot(Q, -1, T)}, GT,
                        std::nullopt, 1.0, w, w));
    t.push_back(hyp_map(MapName::S4Q, "S4Q",
                        {slot(P, 1, R), slot(HalfT, 1, S), slot(Q, 1, W), slot(P, -1, T)}, GT,
                        std::nullopt, w, 1.0, w));
    t.push_back(hyp_map(MapName::S5P, "S5P",
                        {slot(Q, -1, R), slot(P, 1, W), slot(HalfT, 1, S), slot(P, 1, W), slot(Q, -1, T)},
                        G, iH, 2.0 * w, 3.0, 2.0 * w));
    t.push_back(hyp_map(MapName::S5Q, "S5Q",
                        {slot(Q, -1, R), slot(P, 1, W), slot(HalfT, 1, S), slot(Q, 1, W), slot(P, -1, T)},
                        G, iU, 3.0, 2.0 * w, 2.0 * w));
    t.push_back(hyp_map(MapName::S5a, "S5a",
                        {slot(P, 1, R), slot(HalfT, 1, S), slot(P, 1, W), slot(Q, -1, W), slot(Q, -1, T)},
                        G, iT, 1.0, w, 2.0 * w));
    t.push_back(hyp_map(MapName::S6, "S6",
                        {slot(Q, -1, R), slot(P, 1, W), slot(HalfT, 1, S), slot(P, 1, W), slot(Q, -1, W),
                         slot(Q, -1, T)},
                        GT, std::nullopt, 2.0 * w, 3.0, 3.0 * w));
    t.push_back(hyp_map(MapName::S7b, "S7b",
                        {slot(Q, -1, R), slot(P, 1, W), slot(HalfT, 1, S), slot(P, 1, W), slot(Q, -1, W),
                         slot(Q, -1, W), slot(P, 1, T)},
                        G, iT, -7.0, -5.0 * w, 4.0 * w));
    t.push_back(poly_map(MapName::B3, "B3", {slot(P, 1, R), slot(Q, 1, S), slot(P, 1, T)},
                         OrbitGroup::SigmaT, std::nullopt, {0, 1, 0, 0}, 0.0));
    return t;
}

const std::vector<MapDescriptor>& table() {
    static const std::vector<MapDescriptor> t = build_table();
    return t;
}

double param_value(Param p, const Params& v) {
    switch (p) {
        case Param::R: return v.r;
        case Param::S: return v.s;
        case Param::T: return v.t;
        case Param::W: return kSqrt2;
    }
    return 0.0;
}

double at(const Matrix2& m, int i, int j) {
    if (i == 0) return j == 0 ? m.a : m.b;
    return j == 0 ? m.c : m.d;
}

Matrix2 nilpotent(Gen g) {
    return g == Gen::P ? Matrix2{0.0, 1.0, 0.0, 0.0} : Matrix2{0.0, 0.0, 1.0, 0.0};
}

double frob_dot(const Matrix2& x, const Matrix2& y) { return x.a * y.a + x.b * y.b + x.c * y.c + x.d * y.d; }

Matrix2 middle_product(const MapDescriptor& m, double s) {
    Matrix2 g = Matrix2::identity();
    const Params p{0.0, s, 0.0};
    for (std::size_t k = 1; k + 1 < m.slots.size(); ++k) {
        const Slot& sl = m.slots[k];
        g = g * exp_matrix(generator(sl.gen) * (sl.sign * param_value(sl.param, p)));
    }
    return g;
}

/// Real roots of A x^2 + B x + C = 0; a slightly negative discriminant
/// (relative 1e-12) is treated as a double root.
std::vector<double> quadratic_roots(double A, double B, double C) {
    const double scale = std::max({std::abs(A), std::abs(B), std::abs(C)});
    if (scale == 0.0) return {};
    if (std::abs(A) <= 1e-14 * scale) {
        if (B == 0.0) return {};
        return {-C / B};
    }
    double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) {
        if (disc < -1e-12 * (B * B + std::abs(4.0 * A * C))) return {};
        disc = 0.0;
    }
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (B + (B >= 0.0 ? sq : -sq));
    if (q == 0.0) return {0.0};
    return {q / A, C / q};
}

std::vector<double> solve_pivot(const MapDescriptor& m, double y) {
    std::vector<double> out;
    if (m.pivot == PivotKind::Hyperbolic) {
        for (double xi : quadratic_roots(m.alpha + m.beta, -2.0 * y, m.alpha - m.beta)) {
            if (xi > 0.0) out.push_back(2.0 * std::log(xi));
        }
        return out;
    }
    const auto& c = m.poly;
    if (c[3] != 0.0) {
        try {
            out.push_back(solve_cubic_monotone(y));
        } catch (const OutOfRange&) {
        }
        return out;
    }
    if (c[2] != 0.0) {
        const double q = (y - c[0]) / c[2];
        if (q < -1e-14) return out;
        const double s = std::sqrt(std::max(0.0, q));
        out.push_back(s);
        if (s > 0.0) out.push_back(-s);
        return out;
    }
    out.push_back((y - c[0]) / c[1]);
    return out;
}

}  // namespace

const MapDescriptor& descriptor(MapName id) { return table().at(static_cast<std::size_t>(id)); }

const MapDescriptor& descriptor(const std::string& name) {
    for (const auto& m : table()) {
        if (m.name == name) return m;
    }
    throw UnknownMap("unknown factorization map '" + name + "'");
}

const std::vector<MapName>& all_maps() {
    static const std::vector<MapName> v = [] {
        std::vector<MapName> r;
        for (const auto& m : table()) r.push_back(m.id);
        return r;
    }();
    return v;
}

const std::vector<MapName>& family_maps(Family family) {
    using enum MapName;
    static const std::vector<MapName> f = {A3, A4, A5, C3, C4a, C4c, S3P, S3Q, S4P, S4Q, S5P, S5Q, S5a, S6, S7b};
    static const std::vector<MapName> f1 = {A3, A4, A5, C3, C4a, C4c, S3P, S3Q, S4P, S4Q, S5P, S5Q, S7b};
    static const std::vector<MapName> f2 = {A4, A5, C4a, C4c, S3P, S3Q, S4P, S4Q, S5P, S5Q, S7b, B3};
    switch (family) {
        case Family::F: return f;
        case Family::F1: return f1;
        case Family::F2: return f2;
    }
    return f;
}

Family family_from_name(const std::string& name) {
    if (name == "f") return Family::F;
    if (name == "f1") return Family::F1;
    if (name == "f2") return Family::F2;
    throw OutOfRange("unknown family '" + name + "'");
}

std::string family_name(Family family) {
    switch (family) {
        case Family::F: return "f";
        case Family::F1: return "f1";
        case Family::F2: return "f2";
    }
    return "f";
}

std::vector<SymmetryOp> orbit_ops(const MapDescriptor& m) {
    const auto& all = all_symmetries();
    switch (m.orbit) {
        case OrbitGroup::GammaTilde: return {all.begin(), all.end()};
        case OrbitGroup::Gamma: return {all.begin(), all.begin() + 4};
        case OrbitGroup::SigmaT: return {all[0], all[2]};
    }
    return {};
}

Domain domain(const MapDescriptor& m, Family family) {
    const double w = kSqrt2;
    const double inf = std::numeric_limits<double>::infinity();
    Domain d;
    switch (m.id) {
        case MapName::A3:
        case MapName::A4:
        case MapName::A5:
            d.lo = {0.0, 0.0, 0.0};
            d.hi = {inf, 2.0 * w, inf};
            d.r_le_s = d.t_le_s = true;
            if (m.id == MapName::A4) d.lo[1] = 1.0;
            if (m.id == MapName::A5) {
                d.lo[1] = w;
                d.hi[1] = kSqrt3;
            }
            break;
        case MapName::C3:
        case MapName::C4a:
        case MapName::C4c:
            d.lo = {0.0, 0.0, 0.0};
            // Only the clockwise C4c pattern is beaten for s > 1; C4a keeps the C3 bound.
            d.hi = {inf, m.id == MapName::C4c ? 1.0 : w, inf};
            d.r_le_s = d.t_le_s = true;
            break;
        case MapName::B3:
            d.lo = {-2.0 * w, -2.0 * w, -2.0 * w};
            d.hi = {2.0 * w, 2.0 * w, 2.0 * w};
            break;
        default:
            d.lo = {0.0, 0.0, 0.0};
            d.hi = {w, inf, w};
            if (family != Family::F) {
                if (m.id == MapName::S4P) d.hi[2] = 2.0 * w;
                if (m.id == MapName::S5P) d.hi = {2.0 * w, inf, 2.0 * w};
            }
            break;
    }
    return d;
}

Factorization factorization(const MapDescriptor& m, const Params& p) {
    Factorization f;
    f.factors.reserve(m.slots.size());
    for (const auto& sl : m.slots) {
        Factor x{sl.gen, sl.sign, param_value(sl.param, p)};
        if (x.duration < 0.0) {
            x.duration = -x.duration;
            x.sign = -x.sign;
        }
        f.factors.push_back(x);
    }
    return f;
}

GroupElement evaluate(const MapDescriptor& m, const Params& p) { return evaluate(factorization(m, p)); }

CoverElement evaluate_cover(const MapDescriptor& m, const Params& p) {
    return evaluate_cover(factorization(m, p));
}

double pivot_value(const MapDescriptor& m, double s) {
    if (m.pivot == PivotKind::Hyperbolic) return m.alpha * std::cosh(0.5 * s) + m.beta * std::sinh(0.5 * s);
    const auto& c = m.poly;
    return ((c[3] * s + c[2]) * s + c[1]) * s + c[0];
}

DomainCost domain_and_cost(const MapDescriptor& m, const Params& p, Family family, double tol) {
    DomainCost out;
    for (const auto& sl : m.slots) out.cost += std::abs(param_value(sl.param, p));
    const Domain d = domain(m, family);
    const double v[3] = {p.r, p.s, p.t};
    bool ok = true;
    for (int k = 0; k < 3; ++k) ok = ok && v[k] >= d.lo[k] - tol && v[k] <= d.hi[k] + tol;
    if (d.r_le_s) ok = ok && p.r <= p.s + tol;
    if (d.t_le_s) ok = ok && p.t <= p.s + tol;
    out.in_domain = ok;
    return out;
}

std::vector<Params> invert(const MapDescriptor& m, const GroupElement& g, double tol) {
    require_unimodular(g);
    const Slot& left = m.slots.front();
    const Slot& right = m.slots.back();
    // exp(aP) adds a * row 2 to row 1, exp(aQ) adds a * row 1 to row 2; on the
    // right, exp(bP) adds b * col 1 to col 2 and exp(bQ) adds b * col 2 to col 1.
    const int i = left.gen == Gen::P ? 1 : 0;
    const int j = right.gen == Gen::P ? 0 : 1;
    const int io = 1 - i, jo = 1 - j;
    const Matrix2 nl = nilpotent(left.gen);
    const Matrix2 nr = nilpotent(right.gen);
    const double scale = std::max(1.0, std::max({std::abs(g.a), std::abs(g.b), std::abs(g.c), std::abs(g.d)}));

    std::vector<Params> out;
    auto accept = [&](double s, double a, double b) {
        const Params p{a * left.sign, s, b * right.sign};
        if (!std::isfinite(p.r) || !std::isfinite(p.t)) return;
        if (max_abs_diff(evaluate(m, p), g) <= tol * scale) out.push_back(p);
    };

    for (double s : solve_pivot(m, at(g, i, j))) {
        const Matrix2 M = middle_product(m, s);
        const double p = at(M, i, j);
        if (std::abs(p) >= kPivotTol) {
            accept(s, (at(g, io, j) - at(M, io, j)) / p, (at(g, i, jo) - at(M, i, jo)) / p);
            continue;
        }
        // Vanishing pivot: g - M = a X + b Y is linear in (a, b).
        const Matrix2 X = nl * M;
        const Matrix2 Y = M * nr;
        const Matrix2 D = g - M;
        const double xx = frob_dot(X, X), yy = frob_dot(Y, Y), xy = frob_dot(X, Y);
        const double xd = frob_dot(X, D), yd = frob_dot(Y, D);
        const double det = xx * yy - xy * xy;
        if (det > 1e-20 * std::max(1.0, xx * yy)) {
            accept(s, (yy * xd - xy * yd) / det, (xx * yd - xy * xd) / det);
        } else if (xx > 0.0) {
            // Y = kappa X; any a + kappa b = lambda works. Offer both ends and the even split.
            const double lambda = xd / xx;
            const double kappa = xy / xx;
            accept(s, lambda, 0.0);
            if (kappa != 0.0) {
                accept(s, 0.0, lambda / kappa);
                accept(s, 0.5 * lambda, 0.5 * lambda / kappa);
            }
        } else if (yy > 0.0) {
            accept(s, 0.0, yd / yy);
        } else {
            accept(s, 0.0, 0.0);
        }
    }
    return out;
}

double solve_cubic_monotone(double y) {
    constexpr double kSlack = 1e-9;
    if (!(y >= -kSlack && y <= kSqrt3 + kSlack)) {
        throw OutOfRange("solve_cubic_monotone: y outside [0, sqrt 3]");
    }
    auto p = [](double s) { return s * (s * s - 2.0); };
    // p' = 3s^2 - 2 >= 4 on the bracket; the slack widens it just enough for y +- 1e-9.
    double lo = kSqrt2 - 1e-9, hi = kSqrt3 + 1e-9;
    double s = std::clamp(kSqrt2 * (1.0 + 0.25 * y), lo, hi);
    for (int it = 0; it < 100; ++it) {
        const double f = p(s) - y;
        if (std::abs(f) <= 1e-15) break;
        if (f > 0.0) {
            hi = s;
        } else {
            lo = s;
        }
        double next = s - f / (3.0 * s * s - 2.0);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == s) break;
        s = next;
    }
    return s;
}

}  // namespace sl2
