// Command-line front end: distances, factorizations, spheres and paths.

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sl2/cover.hpp"
#include "sl2/errors.hpp"
#include "sl2/oracle.hpp"
#include "sl2/paths.hpp"
#include "sl2/solver.hpp"
#include "sl2/spheres.hpp"

using namespace sl2;
using nlohmann::ordered_json;

namespace {

constexpr int kMalformed = 2;
constexpr int kVerifyFailed = 1;

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(17);
    s << x + 0.0;  // no negative zero
    return s.str();
}

GroupElement parse_matrix(const std::vector<double>& v) {
    if (v.size() != 4) throw OutOfRange("--matrix needs four entries a,b,c,d");
    const GroupElement g{v[0], v[1], v[2], v[3]};
    require_unimodular(g);
    return g;
}

AlgebraElement parse_slip(const std::vector<double>& v, const char* flag) {
    if (v.size() != 3) throw OutOfRange(std::string(flag) + " needs three entries h,t,u");
    return {v[0], v[1], v[2]};
}

GroupKind parse_group(const std::string& s) {
    if (s == "sl2") return GroupKind::SL2;
    if (s == "psl2") return GroupKind::PSL2;
    throw OutOfRange("unknown group '" + s + "'");
}

ordered_json factors_json(const Factorization& f) {
    ordered_json out = ordered_json::array();
    for (const auto& x : f.factors) out.push_back({{"control", control_name(x)}, {"duration", x.duration}});
    return out;
}

ordered_json matrix_json(const Matrix2& m) { return {m.a, m.b, m.c, m.d}; }

ordered_json distance_json(const DistanceResult& d) {
    ordered_json j;
    j["cost"] = d.cost;
    j["group"] = d.group == GroupKind::SL2 ? "sl2" : "psl2";
    j["map"] = d.map_name;
    j["symmetry"] = d.symmetry.name();
    j["params"] = {{"r", d.params.r + 0.0}, {"s", d.params.s + 0.0}, {"t", d.params.t + 0.0}};
    j["negated"] = d.negated;
    j["factors"] = factors_json(d.factorization);
    return j;
}

DistanceResult solve(const GroupElement& g, GroupKind group, Family family) {
    return group == GroupKind::SL2 ? distance_sl2(g, family) : distance_psl2(g, family);
}

void print_distance(const DistanceResult& d, bool json) {
    if (json) {
        std::cout << distance_json(d).dump(2) << '\n';
        return;
    }
    std::cout << "cost " << fmt(d.cost) << '\n';
    std::cout << "map " << (d.map_name.empty() ? "-" : d.map_name) << ' ' << d.symmetry.name() << '\n';
    std::cout << "params " << fmt(d.params.r) << ' ' << fmt(d.params.s) << ' ' << fmt(d.params.t) << '\n';
    if (d.negated) std::cout << "negated 1\n";
    std::cout << "factors";
    for (const auto& x : d.factorization.factors) std::cout << " (" << control_name(x) << ',' << fmt(x.duration) << ')';
    std::cout << '\n';
}

void print_factorization(const GroupElement& g, const DistanceResult& d, bool json) {
    const GroupElement target = d.negated ? -g : g;
    const double residual = max_abs_diff(evaluate(d.factorization), target);
    if (json) {
        ordered_json j = distance_json(d);
        j["product"] = matrix_json(evaluate(d.factorization));
        j["residual"] = residual;
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::cout << "cost " << fmt(d.cost) << '\n';
    std::cout << "map " << (d.map_name.empty() ? "-" : d.map_name) << ' ' << d.symmetry.name() << '\n';
    double t = 0.0;
    for (std::size_t k = 0; k < d.factorization.factors.size(); ++k) {
        const Factor& x = d.factorization.factors[k];
        std::cout << k + 1 << ' ' << control_name(x) << ' ' << fmt(x.duration) << " [" << fmt(t) << ", "
                  << fmt(t + x.duration) << "]\n";
        t += x.duration;
    }
    std::cout << "residual " << fmt(residual) << '\n';
}

/// Oracle soundness on random elements: no brute-force word beats the solver.
IdentityCheck oracle_check(std::uint64_t seed, int samples) {
    IdentityCheck c;
    c.name = "oracle/soundness";
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    for (int k = 0; k < samples; ++k) {
        const GroupElement g = cover_map({coord(engine), coord(engine), coord(engine)});
        const double d = distance_sl2(g).cost;
        const double o = refine_upper_bound(g, 6, 4, seed + static_cast<std::uint64_t>(k));
        const double gap = d - o;
        c.max_error = std::max(c.max_error, std::max(gap, 0.0));
        ++c.samples;
        if (gap > 1e-5) ++c.failures;
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-optimal factorizations in SL(2) and its cover"};
    app.require_subcommand(1);

    std::vector<double> matrix;
    std::string group = "sl2";
    std::string family = "f1";
    bool json = false;

    auto add_target = [&](CLI::App* sub) {
        sub->add_option("--matrix", matrix, "Row-major entries a,b,c,d")->delimiter(',')->required();
        sub->add_option("--group", group, "sl2 or psl2");
        sub->add_option("--family", family, "f, f1 or f2");
        sub->add_flag("--json", json, "JSON output");
    };

    auto* dist = app.add_subcommand("dist", "Factorization cost and an optimal word");
    add_target(dist);
    auto* factorize = app.add_subcommand("factorize", "Optimal factor sequence with switch times");
    add_target(factorize);

    std::vector<double> s1, s2;
    auto* twoslip = app.add_subcommand("twoslip", "Distance for the control set conv(+-S1, +-S2)");
    twoslip->add_option("--s1", s1, "First slip h,t,u")->delimiter(',')->required();
    twoslip->add_option("--s2", s2, "Second slip h,t,u")->delimiter(',')->required();
    twoslip->add_option("--matrix", matrix, "Row-major entries a,b,c,d")->delimiter(',')->required();
    twoslip->add_flag("--json", json, "JSON output");

    double cost = 1.0;
    int res = 40;
    std::string out_file;
    std::string csv_file;
    double filter_tol = -1.0;
    std::string sphere_group = "sl2";
    auto* sphere = app.add_subcommand("sphere", "Mesh the metric sphere of radius c");
    sphere->add_option("--cost", cost, "Radius c > 0")->required();
    sphere->add_option("--res", res, "Grid resolution per patch");
    sphere->add_option("--out", out_file, "OBJ output file")->required();
    sphere->add_option("--csv", csv_file, "Optional triangle CSV output file");
    sphere->add_option("--filter", filter_tol, "Drop vertices with distance below c - tol");
    sphere->add_option("--group", sphere_group, "sl2 or cover");

    double step = 1e-2;
    auto* path = app.add_subcommand("path", "Shortest hyperbolic Reeds-Shepp path in the disc");
    path->add_option("--matrix", matrix, "Row-major entries a,b,c,d")->delimiter(',')->required();
    path->add_option("--step", step, "Sampling step");
    path->add_option("--out", out_file, "CSV output file")->required();

    std::string suite = "identities";
    std::uint64_t seed = 1;
    int samples = 50;
    auto* verify = app.add_subcommand("verify", "Numerical self-checks");
    verify->add_option("--suite", suite, "identities, oracle or all");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--samples", samples, "Samples per check");
    verify->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kMalformed;
    }

    try {
        if (dist->parsed() || factorize->parsed()) {
            const GroupElement g = parse_matrix(matrix);
            const DistanceResult d = solve(g, parse_group(group), family_from_name(family));
            if (dist->parsed()) print_distance(d, json);
            else print_factorization(g, d, json);
            return 0;
        }
        if (twoslip->parsed()) {
            const SlipPair pair{parse_slip(s1, "--s1"), parse_slip(s2, "--s2")};
            const GroupElement g = parse_matrix(matrix);
            const TwoSlipNormalization n = normalize_two_slip(pair);
            const double d = distance_two_slip(pair, g);
            if (json) {
                ordered_json j;
                j["mu"] = n.mu;
                j["g0"] = matrix_json(n.g0);
                j["lambda"] = 1.0 / n.mu;
                j["distance"] = d;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "mu " << fmt(n.mu) << '\n';
                std::cout << "g0 " << fmt(n.g0.a) << ' ' << fmt(n.g0.b) << ' ' << fmt(n.g0.c) << ' ' << fmt(n.g0.d) << '\n';
                std::cout << "lambda " << fmt(1.0 / n.mu) << '\n';
                std::cout << "distance " << fmt(d) << '\n';
            }
            return 0;
        }
        if (sphere->parsed()) {
            if (sphere_group != "sl2" && sphere_group != "cover") throw OutOfRange("unknown group '" + sphere_group + "'");
            auto patches = build_sphere(cost, res, sphere_group == "sl2" ? SphereGroup::SL2 : SphereGroup::Cover);
            if (filter_tol >= 0.0) patches = filter_optimal(patches, filter_tol);
            std::ofstream obj(out_file);
            if (!obj) throw OutOfRange("cannot write '" + out_file + "'");
            write_obj(obj, patches);
            if (!csv_file.empty()) {
                std::ofstream csv(csv_file);
                if (!csv) throw OutOfRange("cannot write '" + csv_file + "'");
                write_triangle_csv(csv, patches);
            }
            std::size_t v = 0, f = 0;
            for (const auto& p : patches) {
                v += p.vertices.size();
                f += p.triangles.size();
            }
            std::cout << "patches " << patches.size() << "\nvertices " << v << "\ntriangles " << f << "\nmax_abs_u "
                      << fmt(max_abs_u(patches)) << '\n';
            return 0;
        }
        if (path->parsed()) {
            const RscpPlan plan = plan_rscp(parse_matrix(matrix), step);
            std::ofstream csv(out_file);
            if (!csv) throw OutOfRange("cannot write '" + out_file + "'");
            write_path_csv(csv, plan.path);
            int cusps = 0;
            for (const auto& p : plan.path) cusps += p.pose.cusp;
            std::cout << "cost " << fmt(plan.distance.cost) << "\nsamples " << plan.path.size() << "\ncusps " << cusps
                      << '\n';
            return 0;
        }
        if (verify->parsed()) {
            if (suite != "identities" && suite != "oracle" && suite != "all") throw OutOfRange("unknown suite '" + suite + "'");
            if (samples < 1) throw OutOfRange("--samples must be positive");
            IdentityReport report;
            if (suite != "oracle") report = identity_suite(seed, samples);
            if (suite != "identities") report.checks.push_back(oracle_check(seed, samples));
            if (json) {
                std::cout << report.to_json() << '\n';
            } else {
                for (const auto& c : report.checks) {
                    std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << " samples " << c.samples << " failures "
                              << c.failures << " max_error " << fmt(c.max_error) << '\n';
                }
            }
            return report.passed() ? 0 : kVerifyFailed;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMalformed;
    }
    return kMalformed;
}
