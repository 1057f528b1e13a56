#include "sl2/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sl2/errors.hpp"
#include "sl2/solver.hpp"

namespace sl2 {

namespace {

using Point = std::array<double, 2>;

/// Keeps the part of a convex polygon with a*s + b*t <= k.
std::vector<Point> clip(const std::vector<Point>& poly, double a, double b, double k) {
    std::vector<Point> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        const double fp = a * p[0] + b * p[1] - k;
        const double fq = a * q[0] + b * q[1] - k;
        if (fp <= 0.0) out.push_back(p);
        if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
            const double x = fp / (fp - fq);
            out.push_back({p[0] + x * (q[0] - p[0]), p[1] + x * (q[1] - p[1])});
        }
    }
    return out;
}

double area(const std::vector<Point>& poly) {
    double a = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % poly.size()];
        a += p[0] * q[1] - p[1] * q[0];
    }
    return 0.5 * std::abs(a);
}

/// Range of t on the vertical line through s.
std::pair<double, double> t_range(const std::vector<Point>& poly, double s) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % poly.size()];
        const double s0 = std::min(p[0], q[0]);
        const double s1 = std::max(p[0], q[0]);
        if (s < s0 || s > s1) continue;
        if (s1 > s0) {
            const double t = p[1] + (s - p[0]) / (q[0] - p[0]) * (q[1] - p[1]);
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        } else {
            lo = std::min({lo, p[1], q[1]});
            hi = std::max({hi, p[1], q[1]});
        }
    }
    return {lo, hi};
}

struct CostForm {
    double constant = 0.0;
    double s = 0.0;
};

/// The cost is r + t + form.s * s + form.constant on the nonnegative domain.
CostForm cost_form(const MapDescriptor& m) {
    CostForm f;
    for (const auto& sl : m.slots) {
        if (sl.param == Param::S) f.s += 1.0;
        if (sl.param == Param::W) f.constant += kSqrt2;
    }
    return f;
}

/// Level-set slice in the (s, t) plane; empty if it has no interior.
std::vector<Point> slice(const MapDescriptor& m, const Domain& d, double c) {
    const CostForm f = cost_form(m);
    const double rest = c - f.constant;
    if (rest <= 0.0) return {};
    const double smax = std::min(d.hi[1], rest / std::max(f.s, 1.0));
    const double tmax = std::min(d.hi[2], rest);
    if (smax <= d.lo[1] || tmax <= d.lo[2]) return {};
    std::vector<Point> poly = {{d.lo[1], d.lo[2]}, {smax, d.lo[2]}, {smax, tmax}, {d.lo[1], tmax}};
    // r = rest - f.s s - t must lie in [lo_r, hi_r].
    poly = clip(poly, f.s, 1.0, rest - d.lo[0]);
    if (std::isfinite(d.hi[0])) poly = clip(poly, -f.s, -1.0, d.hi[0] - rest);
    if (d.r_le_s) poly = clip(poly, -(f.s + 1.0), -1.0, -rest);
    if (d.t_le_s) poly = clip(poly, -1.0, 1.0, 0.0);
    if (poly.size() < 3 || area(poly) <= 1e-14 * std::max(1.0, c * c)) return {};
    return poly;
}

SpherePatch mesh(const MapDescriptor& m, const SymmetryOp& op, const std::vector<Point>& poly, double c, int n,
                 SphereGroup group) {
    const CostForm f = cost_form(m);
    double s0 = std::numeric_limits<double>::infinity();
    double s1 = -s0;
    for (const auto& p : poly) {
        s0 = std::min(s0, p[0]);
        s1 = std::max(s1, p[0]);
    }
    SpherePatch patch;
    patch.map_name = m.name;
    patch.symmetry = op;
    patch.cost = c;
    for (int i = 0; i < n; ++i) {
        const double s = i == n - 1 ? s1 : s0 + (s1 - s0) * i / (n - 1);
        const auto [t0, t1] = t_range(poly, s);
        for (int j = 0; j < n; ++j) {
            const double t = j == n - 1 ? t1 : t0 + (t1 - t0) * j / (n - 1);
            const double r = c - f.constant - f.s * s - t;
            const Params p{r, s, t};
            CoverElement x = apply_cover(op, evaluate_cover(m, p));
            if (group == SphereGroup::SL2) x.u = wrap_angle(x.u);
            patch.vertices.push_back(x);
            patch.params.push_back(p);
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) {
            const int a = i * n + j;
            const int b = a + n;
            patch.triangles.push_back({a, b, b + 1});
            patch.triangles.push_back({a, b + 1, a + 1});
        }
    }
    return patch;
}

}  // namespace

std::vector<SpherePatch> build_sphere(double c, int resolution, SphereGroup group, Family family) {
    if (!(c > 0.0) || !std::isfinite(c)) throw InvalidCost("build_sphere: cost must be positive and finite");
    if (resolution < 2) throw OutOfRange("build_sphere: resolution must be at least 2");
    std::vector<SpherePatch> out;
    for (MapName id : family_maps(family)) {
        const MapDescriptor& m = descriptor(id);
        const auto poly = slice(m, domain(m, family), c);
        if (poly.empty()) continue;
        for (const SymmetryOp& op : orbit_ops(m)) out.push_back(mesh(m, op, poly, c, resolution, group));
    }
    std::stable_sort(out.begin(), out.end(), [](const SpherePatch& x, const SpherePatch& y) {
        if (x.map_name != y.map_name) return x.map_name < y.map_name;
        return x.symmetry.index() < y.symmetry.index();
    });
    return out;
}

std::vector<SpherePatch> filter_optimal(const std::vector<SpherePatch>& patches, double tol) {
    std::vector<SpherePatch> out;
    for (const auto& p : patches) {
        std::vector<char> keep(p.vertices.size(), 1);
        if (std::isfinite(tol)) {
            for (std::size_t k = 0; k < p.vertices.size(); ++k) {
                keep[k] = distance_sl2(cover_map(p.vertices[k])).cost >= p.cost - tol;
            }
        }
        SpherePatch q;
        q.map_name = p.map_name;
        q.symmetry = p.symmetry;
        q.cost = p.cost;
        q.filtered_optimal = true;
        std::vector<std::array<int, 3>> tris;
        std::vector<char> used(p.vertices.size(), 0);
        for (const auto& tri : p.triangles) {
            if (!keep[tri[0]] || !keep[tri[1]] || !keep[tri[2]]) continue;
            tris.push_back(tri);
            for (int k : tri) used[k] = 1;
        }
        // Survivors keep their relative order, so nothing moves when all survive.
        std::vector<int> index(p.vertices.size(), -1);
        for (std::size_t k = 0; k < p.vertices.size(); ++k) {
            if (!used[k]) continue;
            index[k] = static_cast<int>(q.vertices.size());
            q.vertices.push_back(p.vertices[k]);
            q.params.push_back(p.params[k]);
        }
        for (const auto& tri : tris) q.triangles.push_back({index[tri[0]], index[tri[1]], index[tri[2]]});
        if (!q.triangles.empty()) out.push_back(std::move(q));
    }
    return out;
}

double max_abs_u(const std::vector<SpherePatch>& patches) {
    double m = 0.0;
    for (const auto& p : patches)
        for (const auto& v : p.vertices) m = std::max(m, std::abs(v.u));
    return m;
}

void write_obj(std::ostream& out, const std::vector<SpherePatch>& patches) {
    const auto old = out.precision(17);
    for (const auto& p : patches) {
        out << "# patch " << p.map_name << ' ' << p.symmetry.name() << '\n';
        for (const auto& v : p.vertices) out << "v " << v.h + 0.0 << ' ' << v.t + 0.0 << ' ' << v.u + 0.0 << '\n';
    }
    std::size_t base = 1;
    for (const auto& p : patches) {
        out << "# faces " << p.map_name << ' ' << p.symmetry.name() << '\n';
        for (const auto& t : p.triangles) out << "f " << base + t[0] << ' ' << base + t[1] << ' ' << base + t[2] << '\n';
        base += p.vertices.size();
    }
    out.precision(old);
}

void write_triangle_csv(std::ostream& out, const std::vector<SpherePatch>& patches) {
    const auto old = out.precision(17);
    out << "map,symmetry,h1,t1,u1,h2,t2,u2,h3,t3,u3\n";
    for (const auto& p : patches) {
        for (const auto& t : p.triangles) {
            out << p.map_name << ',' << p.symmetry.name();
            for (int k : t) out << ',' << p.vertices[k].h + 0.0 << ',' << p.vertices[k].t + 0.0 << ',' << p.vertices[k].u + 0.0;
            out << '\n';
        }
    }
    out.precision(old);
}

}  // namespace sl2
