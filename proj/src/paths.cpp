#include "sl2/paths.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

#include "sl2/errors.hpp"

namespace sl2 {

std::vector<TrajectorySample> sample_trajectory(const Factorization& f, double step) {
    if (!(step > 0.0)) throw OutOfRange("sample_trajectory: step must be positive");
    std::vector<TrajectorySample> out{{0.0, GroupElement::identity(), -1}};
    GroupElement prefix = GroupElement::identity();
    double tau = 0.0;
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
        const Factor& x = f.factors[j];
        if (x.duration <= 0.0) continue;
        const AlgebraElement a = x.control();
        const int n = std::max(1, static_cast<int>(std::ceil(x.duration / step)));
        for (int k = 1; k < n; ++k) {
            const double dt = x.duration * k / n;
            out.push_back({tau + dt, prefix * exp_matrix(a * dt), static_cast<int>(j)});
        }
        // Same product as evaluate(), so the endpoint matches bit for bit.
        prefix = prefix * exp_matrix(a * x.duration);
        tau += x.duration;
        out.push_back({tau, prefix, static_cast<int>(j)});
    }
    return out;
}

DiscPose disc_pose(const GroupElement& g) {
    require_unimodular(g);
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    const C den = g.c * i + g.d;
    const C z = (g.a * i + g.b) / den;
    DiscPose p;
    p.z = i * (z - i) / (z + i);
    // d/dz of the disc map is -2/(z+i)^2 and the Moebius derivative is 1/den^2.
    const C v = -1.0 / ((z + i) * den * (z + i) * den);
    p.theta = std::arg(v);
    return p;
}

double disc_distance(std::complex<double> z1, std::complex<double> z2) {
    const double q = std::abs(z1 - z2) / std::abs(1.0 - std::conj(z1) * z2);
    return 2.0 * std::atanh(std::min(q, 1.0));
}

int drive_direction(const Factor& f) {
    const double t = f.control().t;
    return t > 0.0 ? 1 : (t < 0.0 ? -1 : 0);
}

std::vector<PathPoint> disc_path(const Factorization& f, double step) {
    const auto samples = sample_trajectory(f, step);
    std::vector<PathPoint> out;
    out.reserve(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        PathPoint p{samples[k].time, disc_pose(samples[k].g)};
        const int j = samples[k].factor;
        // A switch instant is the last sample of its factor.
        if (j >= 0 && k + 1 < samples.size() && samples[k + 1].factor != j) {
            const int before = drive_direction(f.factors[j]);
            const int after = drive_direction(f.factors[samples[k + 1].factor]);
            p.pose.cusp = before * after < 0;
        }
        out.push_back(p);
    }
    return out;
}

RscpPlan plan_rscp(const GroupElement& target, double step) {
    require_unimodular(target);
    RscpPlan plan;
    plan.distance = distance_psl2(target);
    plan.path = disc_path(plan.distance.factorization, step);
    return plan;
}

namespace {

using Point = std::complex<double>;

double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

double point_segment_distance(Point p, Point a, Point b) {
    const Point d = b - a;
    const double len2 = std::norm(d);
    double s = len2 > 0.0 ? (std::conj(d) * (p - a)).real() / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(p - (a + s * d));
}

bool segments_meet(Point a, Point b, Point c, Point d, double tol) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                     point_segment_distance(c, a, b), point_segment_distance(d, a, b)}) <= tol;
}

}  // namespace

bool has_self_intersection(const std::vector<PathPoint>& path, double tol) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        for (std::size_t j = i + 2; j + 1 < path.size(); ++j) {
            if (segments_meet(path[i].pose.z, path[i + 1].pose.z, path[j].pose.z, path[j + 1].pose.z, tol)) return true;
        }
    }
    return false;
}

void write_path_csv(std::ostream& out, const std::vector<PathPoint>& path) {
    const auto old = out.precision(17);
    out << "t,re,im,theta,cusp\n";
    for (const auto& p : path) {
        // Adding 0.0 prints negative zero as 0.
        out << p.time << ',' << p.pose.z.real() + 0.0 << ',' << p.pose.z.imag() + 0.0 << ',' << p.pose.theta + 0.0 << ','
            << (p.pose.cusp ? 1 : 0) << '\n';
    }
    out.precision(old);
}

}  // namespace sl2
