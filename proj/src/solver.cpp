#include "sl2/solver.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

constexpr double kTieTol = 1e-9;

struct Candidate {
    double cost = std::numeric_limits<double>::infinity();
    const MapDescriptor* map = nullptr;
    SymmetryOp symmetry;
    Params params;
};

bool key_less(const Candidate& x, const Candidate& y) {
    return std::make_tuple(x.map->name, x.symmetry.index(), x.params.r, x.params.s, x.params.t) <
           std::make_tuple(y.map->name, y.symmetry.index(), y.params.r, y.params.s, y.params.t);
}

bool better(const Candidate& x, const Candidate& best) {
    if (best.map == nullptr) return true;
    if (x.cost < best.cost - kTieTol) return true;
    if (x.cost > best.cost + kTieTol) return false;
    return key_less(x, best);
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

DistanceResult distance_sl2(const GroupElement& g, Family family) {
    require_unimodular(g);
    Candidate best;
    for (MapName id : family_maps(family)) {
        const MapDescriptor& m = descriptor(id);
        if (best.map != nullptr && m.min_cost > best.cost + kTieTol) continue;
        for (const SymmetryOp& phi : orbit_ops(m)) {
            // phi(f(p)) = g  iff  f(p) = phi(g), all symmetries being involutions.
            const GroupElement target = apply_group(phi, g);
            for (const Params& p : invert(m, target)) {
                const DomainCost dc = domain_and_cost(m, p, family);
                if (!dc.in_domain) continue;
                Candidate c{dc.cost, &m, phi, p};
                if (better(c, best)) best = c;
            }
        }
    }
    if (best.map == nullptr) {
        // Unreachable for a sufficient family; kept as a hard failure.
        throw Error("no factorization found in the requested family");
    }
    DistanceResult r;
    r.factorization = normalized(apply_factorization(best.symmetry, factorization(*best.map, best.params)));
    r.cost = r.factorization.cost();
    r.symmetry = best.symmetry;
    r.params = best.params;
    r.group = GroupKind::SL2;
    if (!r.factorization.factors.empty()) r.map_name = best.map->name;
    return r;
}

DistanceResult distance_psl2(const GroupElement& g, Family family) {
    require_unimodular(g);
    DistanceResult plus = distance_sl2(g, family);
    DistanceResult minus = distance_sl2(-g, family);
    DistanceResult& r = minus.cost < plus.cost - kTieTol ? minus : plus;
    r.negated = (&r == &minus);
    r.group = GroupKind::PSL2;
    return r;
}

TwoSlipNormalization normalize_two_slip(const SlipPair& pair) {
    AlgebraElement s1 = pair.s1, s2 = pair.s2;
    for (const AlgebraElement* s : {&s1, &s2}) {
        const double n2 = s->h * s->h + s->t * s->t + s->u * s->u;
        if (n2 == 0.0 || std::abs(s->det()) > 1e-10 * std::max(1.0, n2)) {
            throw DegenerateSlip("slip generator must be a nonzero matrix with det = 0");
        }
    }
    const Eigen::Vector3d comm = ad_rep(s1) * as_vector(s2);
    const double n1 = as_vector(s1).norm(), n2 = as_vector(s2).norm();
    if (comm.norm() <= 1e-10 * n1 * n2) throw DegenerateSlip("slip generators commute");
    if (s1.u < 0.0) s1 = -s1;
    if (s2.u < 0.0) s2 = -s2;

    // Rotation: exp(a ad U) S1 = rho1 P.
    const double radius = std::hypot(s1.h, s1.t);
    const double phi = std::atan2(s1.t, s1.h);
    const double a = 0.5 * (phi - 0.5 * kPi);
    const double rho1 = 2.0 * radius;
    const GroupElement g1 = exp_matrix(kU * a);
    // Shearing: exp(tau ad P) X = -rho2 Q for X = Ad(g1) S2.
    const AlgebraElement x = from_vector(adjoint(g1) * as_vector(s2));
    const double rho2 = x.u - x.t;
    const double tau = x.h / rho2;
    const GroupElement g2 = exp_matrix(kP * tau);
    // Hyperbolic rotation balancing rho1 P and -rho2 Q.
    const double hh = 0.25 * std::log(rho2 / rho1);
    const GroupElement g3 = exp_matrix(kH * hh);
    return {std::sqrt(rho1 * rho2), (g3 * g2 * g1).adjugate()};
}

double distance_two_slip(const SlipPair& pair, const GroupElement& g, Family family) {
    require_unimodular(g);
    const TwoSlipNormalization n = normalize_two_slip(pair);
    return distance_sl2(n.g0.adjugate() * g * n.g0, family).cost / n.mu;
}

Factorization alternating_word(int n, double r, double s, double t) {
    Factorization f;
    for (int k = 0; k < n; ++k) {
        const bool p_slot = (k % 2 == 0);
        const double d = k == 0 ? r : (k == n - 1 ? t : s);
        f.factors.push_back({p_slot ? Gen::P : Gen::Q, p_slot ? 1 : -1, d});
    }
    return f;
}

CentralAlt central_alt(int n) {
    if (n < 3 || n > 64) throw OutOfRange("central_alt: n must lie in [3, 64]");
    const double s = 2.0 * std::cos(kPi / n);
    return {s, evaluate_cover(alternating_word(n, s, s, s))};
}

double eval_pn(int n, double xi) {
    if (n < 3) throw OutOfRange("eval_pn: n must be at least 3");
    double sum = 0.0;
    if (n % 2 == 0) {
        const int k = n / 2;
        for (int j = 0; j <= k / 2; ++j) {
            sum += binomial(k, 2 * j) * std::pow(xi, k - 2 * j) * std::pow(xi * xi - 1.0, j);
        }
        return sum;
    }
    const int k = (n - 1) / 2;
    for (int j = 0; j <= 2 * k; ++j) sum += ((j % 2 == 0) ? 1.0 : -1.0) * std::pow(xi, j);
    for (int j = 1; j <= k; ++j) {
        sum += binomial(n, 2 * j) * std::pow(xi, n - 2 * j) * (xi - 1.0) * std::pow(xi * xi - 1.0, j - 1);
    }
    return sum;
}

double eval_muN(int N, double s) {
    const double s2 = s * s;
    double num, den;
    switch (N) {
        case 1: num = 2.0; den = s; break;
        case 2: num = 2.0 * s; den = s2 - 1.0; break;
        case 3: num = 2.0 * (s2 - 1.0); den = s * (s2 - 2.0); break;
        case 4: num = 2.0 * s * (s2 - 2.0); den = s2 * s2 - 3.0 * s2 + 1.0; break;
        case 5: num = 2.0 * (s2 * s2 - 3.0 * s2 + 1.0); den = s * (s2 * s2 - 4.0 * s2 + 3.0); break;
        default: throw OutOfRange("eval_muN: N must lie in 1..5");
    }
    if (std::abs(den) < 1e-14) throw PoleOfRational("eval_muN: denominator vanishes");
    return num / den;
}

}  // namespace sl2
