// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sl2/errors.hpp"
#include "sl2/fammaps.hpp"
#include "sl2/oracle.hpp"
#include "sl2/paths.hpp"
#include "sl2/solver.hpp"
#include "sl2/spheres.hpp"
#include "support.hpp"

using namespace sl2;
using sl2::testing::Rng;

namespace {

constexpr double w = kSqrt2;

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Collects failures and the worst deviation of a criterion.
struct Tally {
    int failures = 0;
    double worst = 0.0;
    std::string first;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ == 0) first = what;
    }
    void error(double e, double tol, const std::string& what) {
        worst = std::max(worst, e);
        check(e <= tol, what + " error " + std::to_string(e));
    }
    Outcome outcome(const std::string& summary) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst %.3g", worst);
        std::string d = summary + ", " + buf;
        if (failures) d += ", " + std::to_string(failures) + " failures, first: " + first;
        return {failures == 0, d};
    }
};

double rotation_cost(double a) { return std::sin(a) + 2 * std::tan(a / 2); }

Factorization word(std::initializer_list<std::pair<const char*, double>> xs) {
    Factorization f;
    for (const auto& [name, d] : xs) {
        const std::string n = name;
        const Gen g = n[1] == 'P' ? Gen::P : n[1] == 'Q' ? Gen::Q : Gen::HalfT;
        f.factors.push_back({g, n[0] == '-' ? -1 : 1, d});
    }
    return f;
}

Params random_params(Rng& rng, const MapDescriptor& m, Family fam, double s_max) {
    const Domain d = domain(m, fam);
    Params p;
    p.s = rng.uniform(d.lo[1], std::min(d.hi[1], s_max));
    p.r = rng.uniform(d.lo[0], d.r_le_s ? std::min(d.hi[0], p.s) : d.hi[0]);
    p.t = rng.uniform(d.lo[2], d.t_le_s ? std::min(d.hi[2], p.s) : d.hi[2]);
    return p;
}

Outcome rotation_formula() {
    Tally t;
    for (int k = 0; k < 8; ++k) {
        const double a = 0.1 + 0.2 * k;
        const Matrix2 g = exp_matrix(kU * a);
        const double d = distance_sl2(g).cost;
        t.error(std::abs(d - rotation_cost(a)), 1e-8, "alpha " + std::to_string(a));
        const double o = refine_upper_bound(g, 6, 64, 1000 + k);
        t.check(o >= d - 1e-4, "oracle beats the formula at alpha " + std::to_string(a));
    }
    return t.outcome("8 angles, oracle 6 factors x 64 restarts");
}

Outcome identity_suite_check() {
    const IdentityReport r = identity_suite(2024, 50);
    Tally t;
    for (const auto& c : r.checks) {
        t.check(c.passed() && c.samples >= 50, c.name);
        t.worst = std::max(t.worst, c.max_error);
    }
    t.check(r.checks.size() >= 13, "too few checks");
    return t.outcome(std::to_string(r.checks.size()) + " checks at 1e-10");
}

Outcome central_elements() {
    Tally t;
    const double s_expect[] = {1.0, w, (1 + std::sqrt(5.0)) / 2, std::sqrt(3.0), 2 * std::cos(kPi / 7), std::sqrt(2 + w)};
    for (int n = 3; n <= 8; ++n) {
        const CentralAlt c = central_alt(n);
        t.error(sl2::testing::diff(c.element, kU * ((n - 2) * kPi / 2)), 1e-9, "central_alt " + std::to_string(n));
        t.error(std::abs(c.s - s_expect[n - 3]), 1e-12, "s_" + std::to_string(n));
    }
    for (int n = 3; n <= 10; ++n) t.error(std::abs(eval_pn(n, central_alt(n).s / 2)), 1e-10, "p_" + std::to_string(n));
    return t.outcome("n = 3..8 elements, p_n roots n = 3..10");
}

Outcome sufficient_family() {
    Rng rng(4);
    Tally t;
    for (int k = 0; k < 500; ++k) {
        const Matrix2 g = rng.group(2.0);
        const DistanceResult r = distance_sl2(g);
        t.check(r.factorization.size() <= 6, "more than 6 factors");
        for (const auto& f : r.factorization.factors) t.check(f.gen != Gen::HalfU, "U/2 factor");
        t.error(sl2::testing::rel_diff(evaluate(r.factorization), g), 1e-9, "product");
        t.error(std::abs(distance_sl2(g, Family::F).cost - r.cost), 1e-9, "F vs F1");
        t.error(std::abs(distance_sl2(g, Family::F2).cost - r.cost), 1e-9, "F2 vs F1");
    }
    return t.outcome("500 random elements");
}

Outcome metric_axioms() {
    Rng rng(5);
    Tally t;
    for (int k = 0; k < 200; ++k) {
        const Matrix2 g = rng.group(2.0);
        const double c = distance_sl2(g).cost;
        for (const auto& phi : all_symmetries()) t.error(std::abs(distance_sl2(apply_group(phi, g)).cost - c), 1e-8, phi.name());
        t.error(std::abs(distance_sl2(g.adjugate()).cost - c), 1e-8, "inverse");
    }
    double slack = 0.0;
    for (int k = 0; k < 200; ++k) {
        const Matrix2 a = rng.group(1.5), b = rng.group(1.5), c = rng.group(1.5);
        const double lhs = distance_sl2(a.adjugate() * c).cost;
        const double rhs = distance_sl2(a.adjugate() * b).cost + distance_sl2(b.adjugate() * c).cost;
        slack = std::max(slack, lhs - rhs);
        t.check(lhs <= rhs + 1e-7, "triangle inequality");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max triangle excess %.3g", slack);
    return t.outcome(std::string("200 elements x 8 symmetries, 200 triples, ") + buf);
}

Outcome psl2_quotient() {
    Rng rng(6);
    Tally t;
    for (int k = 0; k < 200; ++k) {
        const Matrix2 g = rng.group(2.0);
        const double expect = std::min(distance_sl2(g).cost, distance_sl2(-g).cost);
        t.error(std::abs(distance_psl2(g).cost - expect), 1e-9, "psl2");
    }
    t.error(distance_psl2(-Matrix2::identity()).cost, 0.0, "-I");
    return t.outcome("200 elements and -I");
}

Outcome sphere_contact() {
    Tally t;
    const double c = 3 * std::sqrt(3.0);
    const double top = max_abs_u(build_sphere(c, 40, SphereGroup::Cover));
    t.error(std::abs(top - kPi), 1e-3, "contact at 3 sqrt 3");
    const double below = max_abs_u(build_sphere(5.0, 40, SphereGroup::Cover));
    t.check(below < kPi, "c = 5 reaches u = pi");
    std::set<std::string> names;
    for (const auto& p : build_sphere(1.0, 10)) names.insert(p.map_name);
    t.check(names == std::set<std::string>{"A3", "C3", "C4a", "C4c", "S3P", "S3Q"}, "map set at c = 1");
    int c4 = 0;
    for (const auto& p : filter_optimal(build_sphere(4.0, 30), 1e-6)) c4 += p.map_name.rfind("C4", 0) == 0;
    t.check(c4 == 0, std::to_string(c4) + " C4 patches survive at c = 4");
    char buf[96];
    std::snprintf(buf, sizeof buf, "max|u| %.6f at 3 sqrt 3, %.6f at 5", top, below);
    return t.outcome(buf);
}

Outcome two_slip() {
    Rng rng(8);
    Tally t;
    double scale_err = 0.0;
    int original = 0;
    for (int i = 0; i < 50; ++i) {
        // Random pair with known normalization: Ad(a) maps (mu P, -mu Q) to the slips.
        const Matrix2 a = rng.group(1.0);
        const double mu = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
        const Mat3 ad = adjoint(a);
        AlgebraElement s1 = from_vector(ad * as_vector(kP * mu));
        AlgebraElement s2 = from_vector(ad * as_vector(kQ * -mu));
        if (rng.uniform(0, 1) < 0.5) s1 = -s1;
        if (rng.uniform(0, 1) < 0.5) s2 = -s2;
        const SlipPair pair{s1, s2};
        const TwoSlipNormalization n = normalize_two_slip(pair);
        t.error(std::abs(n.mu - mu), 1e-9 * mu, "mu");
        for (int k = 0; k < 20; ++k) {
            const Matrix2 g = rng.group(0.6);
            const double d = distance_two_slip(pair, g);
            const Matrix2 moved = n.g0.adjugate() * g * n.g0;
            OracleOptions o;
            o.max_factors = 5;
            o.restarts = 4;
            o.seed = 100 * i + k;
            o.generators = {kP * n.mu, kQ * -n.mu, kT * (0.5 * n.mu)};
            t.error(std::abs(refine_upper_bound(moved, o).cost - d), 1e-4, "transformed oracle");
            if (k < 2) {
                // The untransformed problem with the slips themselves as generators.
                AlgebraElement u1 = s1.u < 0 ? -s1 : s1, u2 = s2.u < 0 ? -s2 : s2;
                AlgebraElement mid = (u1 - u2) * 0.5;
                o.generators = {u1, u2, mid};
                t.error(std::abs(refine_upper_bound(g, o).cost - d), 1e-4, "original oracle");
                ++original;
            }
            const double lambda = rng.uniform(0.2, 5.0);
            scale_err = std::max(scale_err, std::abs(distance_two_slip({kP * lambda, kQ * -lambda}, g) -
                                                     distance_sl2(g).cost / lambda));
        }
    }
    t.check(scale_err <= 1e-9, "scaling law error " + std::to_string(scale_err));
    char buf[128];
    std::snprintf(buf, sizeof buf, "50 pairs x 20 elements (+%d untransformed), scaling error %.3g", original, scale_err);
    return t.outcome(buf);
}

Outcome non_optimality() {
    Rng rng(9);
    Tally t;
    auto check = [&](const char* name, const Factorization& f, double gap) {
        const double d = distance_sl2(evaluate(f)).cost;
        t.check(d < f.cost(), std::string(name) + " not strictly beaten");
        t.error(std::max(0.0, d - (f.cost() - gap)), 1e-8, name);
    };
    for (int k = 0; k < 100; ++k) {
        {
            const double s = rng.uniform(0.01, 0.99), r = rng.uniform(0.01, 3.0);
            check("alt3 with s < 1", word({{"+P", r}, {"-Q", s}, {"+P", s}}), r * r * s * s * (1 - s * s) / (s + r * (1 - s * s)));
        }
        {
            const double s = rng.uniform(1.01, w - 0.01), r = rng.uniform(0.01, 3.0);
            check("csp3 with s in (1, sqrt 2)", word({{"+P", r}, {"+Q", s}, {"-P", s}}),
                  r * r * (s * s - 1) * (2 - s * s) / (s + r * (s * s - 1)));
        }
        {
            const double s = rng.uniform(1.02, w - 0.01), r = rng.uniform(1.005, s - 0.005);
            check("csp3 reversal with 1 < r < s", word({{"+P", r}, {"-Q", s}, {"-P", r}}), (r * r - 1) * (2 - r * s) / r);
        }
        {
            const double s = rng.uniform(w + 0.01, 3.0);
            const double mu = 2 * s / (s * s - 1);
            const double r = rng.uniform(0.05 * mu, mu);
            const double tt = rng.uniform(std::max(0.0, mu - r) + 0.01 * mu, mu);
            check("alt4 with s > sqrt 2", word({{"+P", r}, {"-Q", s}, {"+P", s}, {"-Q", tt}}), 2 * (r + tt) - 2 * mu);
        }
    }
    return t.outcome("4 families x 100 points");
}

Outcome round_trip() {
    Rng rng(10);
    Tally t;
    for (MapName id : all_maps()) {
        const MapDescriptor& m = descriptor(id);
        const Family fam = id == MapName::B3 ? Family::F2 : Family::F;
        for (int k = 0; k < 10000; ++k) {
            const Params p = random_params(rng, m, fam, 5.0);
            double best = std::numeric_limits<double>::infinity();
            for (const Params& q : invert(m, evaluate(m, p))) {
                best = std::min(best, std::max({std::abs(p.r - q.r), std::abs(p.s - q.s), std::abs(p.t - q.t)}));
            }
            t.error(best, 1e-9, m.name);
        }
    }
    double residual = 0.0;
    for (int i = 0; i <= 100000; ++i) {
        const double y = std::sqrt(3.0) * i / 100000.0;
        const double s = solve_cubic_monotone(y);
        residual = std::max(residual, std::abs(s * s * s - 2 * s - y));
    }
    t.check(residual <= 1e-13, "cubic residual " + std::to_string(residual));
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu maps x 10^4 triples, cubic residual %.3g", all_maps().size(), residual);
    return t.outcome(buf);
}

bool csp4_or_ssp(const std::string& name) { return name == "C3" || name == "C4a" || name == "C4c" || name[0] == 'S'; }

Outcome rscp_paths() {
    Rng rng(11);
    Tally t;
    int simple_checked = 0;
    for (int k = 0; k < 200; ++k) {
        const Matrix2 g = rng.group(1.5);
        const RscpPlan plan = plan_rscp(g, 1e-2);
        const DiscPose want = disc_pose(g);
        const DiscPose got = plan.path.back().pose;
        t.error(std::abs(got.z - want.z), 1e-9, "endpoint");
        t.error(std::abs(wrap_angle(got.theta - want.theta)), 1e-9, "heading");
        if (csp4_or_ssp(plan.distance.map_name)) {
            ++simple_checked;
            t.check(!has_self_intersection(plan.path), "planned " + plan.distance.map_name + " path crosses itself");
        }
    }
    for (const char* name : {"C3", "C4a", "C4c", "S3P", "S3Q", "S4P", "S4Q", "S5P", "S5Q", "S5a", "S6", "S7b"}) {
        const MapDescriptor& m = descriptor(name);
        for (int k = 0; k < 25; ++k) {
            const Params p = random_params(rng, m, Family::F, 4.0);
            ++simple_checked;
            t.check(!has_self_intersection(disc_path(factorization(m, p), 1e-2)), std::string(name) + " word crosses itself");
        }
    }
    return t.outcome("200 planned endpoints, " + std::to_string(simple_checked) + " CSP/SSP polylines at step 1e-2");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"rotation formula", rotation_formula},
        {"identity suite", identity_suite_check},
        {"central elements", central_elements},
        {"sufficient-family structure", sufficient_family},
        {"symmetry and metric axioms", metric_axioms},
        {"PSL(2) quotient", psl2_quotient},
        {"sphere contact", sphere_contact},
        {"two-slip reduction", two_slip},
        {"non-optimality gaps", non_optimality},
        {"round-trip inversion", round_trip},
        {"RSCP paths", rscp_paths},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
