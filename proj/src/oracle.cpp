#include "sl2/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

#include "sl2/cover.hpp"
#include "sl2/errors.hpp"

namespace sl2 {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

Eigen::Vector4d flat(const Matrix2& m) { return {m.a, m.b, m.c, m.d}; }

/// Word exp(d_0 X_0) ... exp(d_{n-1} X_{n-1}) with residual and Jacobian.
struct Word {
    std::vector<Matrix2> gens;
    Matrix2 target;

    Eigen::Vector4d residual(const Vec& d) const {
        Matrix2 g = Matrix2::identity();
        for (int i = 0; i < d.size(); ++i) g = g * exp_matrix(from_matrix(gens[i]) * d[i]);
        return flat(g - target);
    }

    /// Residual and its Jacobian from prefix and suffix products.
    Eigen::Vector4d linearize(const Vec& d, Mat& jac) const {
        const int n = static_cast<int>(d.size());
        std::vector<Matrix2> e(n), prefix(n + 1), suffix(n + 1);
        for (int i = 0; i < n; ++i) e[i] = exp_matrix(from_matrix(gens[i]) * d[i]);
        prefix[0] = Matrix2::identity();
        for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * e[i];
        suffix[n] = Matrix2::identity();
        for (int i = n - 1; i >= 0; --i) suffix[i] = e[i] * suffix[i + 1];
        jac.resize(4, n);
        for (int i = 0; i < n; ++i) jac.col(i) = flat(prefix[i] * gens[i] * suffix[i]);
        return flat(prefix[n] - target);
    }
};

double objective(const Word& w, const Vec& d, double mu) {
    return d.lpNorm<1>() + 0.5 * mu * w.residual(d).squaredNorm();
}

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

/// Minimizes |d|_1 + mu/2 |F(d) - g|^2 by Levenberg-Marquardt steps on the
/// current orthant, with the pseudo-gradient deciding which zeros may move.
Vec orthant_descent(const Word& w, Vec d, double mu) {
    const int n = static_cast<int>(d.size());
    Mat jac;
    double lambda = 1e-3 * mu;
    double f = objective(w, d, mu);
    for (int it = 0; it < 100; ++it) {
        const Eigen::Vector4d r = w.linearize(d, jac);
        const Vec grad = mu * jac.transpose() * r;
        Vec pg = Vec::Zero(n);
        Vec orth = Vec::Zero(n);
        for (int i = 0; i < n; ++i) {
            if (d[i] != 0.0) {
                pg[i] = grad[i] + sign_of(d[i]);
                orth[i] = sign_of(d[i]);
            } else if (grad[i] + 1.0 < 0.0) {
                pg[i] = grad[i] + 1.0;
                orth[i] = 1.0;
            } else if (grad[i] - 1.0 > 0.0) {
                pg[i] = grad[i] - 1.0;
                orth[i] = -1.0;
            }
        }
        if (pg.lpNorm<Eigen::Infinity>() < 1e-12) break;
        std::vector<int> free;
        for (int i = 0; i < n; ++i) {
            if (orth[i] != 0.0) free.push_back(i);
        }
        const int k = static_cast<int>(free.size());
        Mat jf(4, k);
        Vec pf(k);
        for (int j = 0; j < k; ++j) {
            jf.col(j) = jac.col(free[j]);
            pf[j] = pg[free[j]];
        }
        const Mat gn = mu * jf.transpose() * jf;
        bool accepted = false;
        for (int tries = 0; tries < 40; ++tries) {
            const Vec step = (gn + lambda * Mat::Identity(k, k)).ldlt().solve(-pf);
            Vec cand = d;
            for (int j = 0; j < k; ++j) {
                const int i = free[j];
                const double x = d[i] + step[j];
                cand[i] = sign_of(x) == orth[i] ? x : 0.0;
            }
            const double fc = objective(w, cand, mu);
            if (fc < f) {
                const double moved = (cand - d).lpNorm<Eigen::Infinity>();
                d = cand;
                f = fc;
                lambda = std::max(lambda / 3.0, 1e-12 * mu);
                accepted = moved > 1e-14;
                break;
            }
            lambda *= 4.0;
        }
        if (!accepted) break;
    }
    return d;
}

/// Penalty continuation from a starting point; returns the final iterate.
Vec penalty_descent(const Word& w, Vec d) {
    for (double mu = 1e2; mu <= 1e8 * 1.0001; mu *= 10.0) d = orthant_descent(w, d, mu);
    return d;
}

/// Newton projection onto F(d) = g keeping zero coordinates fixed.
bool polish(const Word& w, Vec& d, double tol) {
    std::vector<int> support;
    for (int i = 0; i < d.size(); ++i) {
        if (std::abs(d[i]) > 1e-11) support.push_back(i);
    }
    Mat jac;
    for (int it = 0; it < 30; ++it) {
        const Eigen::Vector4d r = w.linearize(d, jac);
        if (r.lpNorm<Eigen::Infinity>() <= tol) return true;
        if (support.empty()) return false;
        Mat js(4, support.size());
        for (std::size_t k = 0; k < support.size(); ++k) js.col(k) = jac.col(support[k]);
        const Vec step = js.completeOrthogonalDecomposition().solve(-r);
        for (std::size_t k = 0; k < support.size(); ++k) d[support[k]] += step[k];
    }
    return w.residual(d).lpNorm<Eigen::Infinity>() <= tol;
}

/// All type sequences of the given length with distinct neighbours.
std::vector<std::vector<int>> patterns(int length, int types) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k < types; ++k) {
            if (!cur.empty() && cur.back() == k) continue;
            cur.push_back(k);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace

OracleResult refine_upper_bound(const GroupElement& g, const OracleOptions& options) {
    require_unimodular(g);
    if (options.max_factors < 1 || options.max_factors > 8) throw OutOfRange("oracle: max_factors must lie in 1..8");
    OracleResult best;
    if (max_abs_diff(g, Matrix2::identity()) <= 1e-12) return best;
    best.cost = kInf;

    std::vector<Matrix2> gens;
    if (options.generators.empty()) {
        for (const AlgebraElement& x : {kP, kQ, kT * 0.5}) gens.push_back(to_matrix(x));
    } else {
        for (const AlgebraElement& x : options.generators) gens.push_back(to_matrix(x));
    }
    // Normalize the generators to the trace scale of the canonical set, where
    // tr(PQ) = 1, so that restarts and penalties do not depend on their size.
    double kappa = 0.0;
    for (const auto& x : gens)
        for (const auto& y : gens) kappa = std::max(kappa, std::abs((x * y).trace()));
    kappa = kappa > 0.0 ? std::sqrt(kappa) : 1.0;
    for (auto& x : gens) x = x * (1.0 / kappa);
    const double scale = std::max({1.0, std::abs(g.a), std::abs(g.b), std::abs(g.c), std::abs(g.d)});
    const double tol = 1e-8 * scale;

    std::mt19937_64 engine(options.seed);
    std::uniform_real_distribution<double> duration(0.0, 2.0 * kSqrt2);
    std::bernoulli_distribution coin(0.5);
    const int types = static_cast<int>(gens.size());
    for (const auto& pat : patterns(options.max_factors, types)) {
        Word w;
        w.target = g;
        for (int k : pat) w.gens.push_back(gens[k]);
        for (int rs = 0; rs < options.restarts; ++rs) {
            Vec d(options.max_factors);
            for (int i = 0; i < d.size(); ++i) d[i] = coin(engine) ? duration(engine) : -duration(engine);
            d = penalty_descent(w, d);
            if (!polish(w, d, tol)) continue;
            d /= kappa;
            const double cost = d.lpNorm<1>();
            if (cost < best.cost) {
                best.cost = cost;
                best.durations.assign(d.data(), d.data() + d.size());
                best.types = pat;
            }
        }
    }
    return best;
}

double refine_upper_bound(const GroupElement& g, int max_factors, int restarts, std::uint64_t seed) {
    OracleOptions o;
    o.max_factors = max_factors;
    o.restarts = restarts;
    o.seed = seed;
    return refine_upper_bound(g, o).cost;
}

namespace {

/// Product of exponentials of (generator, duration) pairs in SL(2).
Matrix2 mex(std::initializer_list<std::pair<AlgebraElement, double>> xs) {
    Matrix2 g = Matrix2::identity();
    for (const auto& [x, d] : xs) g = g * exp_matrix(x * d);
    return g;
}

/// The same product evaluated in the cover.
CoverElement mex_cover(std::initializer_list<std::pair<AlgebraElement, double>> xs) {
    CoverElement g{};
    for (const auto& [x, d] : xs) g = compose(g, exp_tilde(x * d));
    return g;
}

double cover_err(const CoverElement& x, const CoverElement& y) {
    return std::max({std::abs(x.h - y.h), std::abs(x.t - y.t), std::abs(x.u - y.u)});
}

double group_err(const Matrix2& x, const Matrix2& y) {
    const double scale = std::max({1.0, std::abs(y.a), std::abs(y.b), std::abs(y.c), std::abs(y.d)});
    return max_abs_diff(x, y) / scale;
}

}  // namespace

bool IdentityReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed()) return false;
    }
    return !checks.empty();
}

std::string IdentityReport::to_json() const {
    nlohmann::json j;
    j["passed"] = passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"samples", c.samples},
                               {"failures", c.failures},
                               {"max_error", c.max_error},
                               {"passed", c.passed()}});
    }
    return j.dump(2);
}

IdentityReport identity_suite(std::uint64_t seed, int samples) {
    constexpr double tol = 1e-10;
    const double w = kSqrt2;
    const AlgebraElement P = kP, Q = kQ, T = kT, U = kU;
    std::mt19937_64 engine(seed);
    auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); };

    IdentityReport report;
    auto run = [&](const std::string& name, const std::function<double()>& sample_error) {
        IdentityCheck c{name};
        for (int k = 0; k < samples; ++k) {
            const double e = sample_error();
            c.max_error = std::max(c.max_error, e);
            ++c.samples;
            if (!(e <= tol)) ++c.failures;
        }
        report.checks.push_back(c);
    };

    // Identities in SL(2).
    run("sl2/swap", [&] {
        double s = uniform(0.2, 3.0);
        if (engine() % 2) s = -s;
        return group_err(mex({{P, s}, {Q, -2 / s}}), -mex({{Q, 2 / s}, {P, -s}}));
    });
    run("sl2/swap-sqrt2", [&] { return group_err(mex({{P, w}, {Q, -w}}), -mex({{Q, w}, {P, -w}})); });
    run("sl2/uturn-slide", [&] {
        const double s = uniform(-3.0, 3.0);
        return group_err(mex({{T, s}, {P, w}, {Q, -w}}), mex({{P, w}, {Q, -w}, {T, -s}}));
    });
    run("sl2/pqp-rewrite", [&] {
        double r = uniform(-w + 0.1, 4.0);
        if (engine() % 2) r = uniform(-6.0, -w - 0.1);
        return group_err(mex({{P, r}, {Q, w}, {P, -w}}),
                         mex({{Q, 2 / (r + w)}, {P, -(r + w)}, {Q, -r * w / (r + w)}}));
    });
    run("sl2/pqp-sqrt2", [&] { return group_err(mex({{P, w}, {Q, w}, {P, -w}}), mex({{Q, w / 2}, {P, -2 * w}, {Q, -w / 2}})); });

    // The same identities in the cover, with the central corrections.
    run("cover/swap", [&] {
        const double s = uniform(0.1, 4.0);
        return cover_err(mex_cover({{P, s}, {Q, -2 / s}}), mex_cover({{Q, 2 / s}, {P, -s}, {U, kPi}}));
    });
    run("cover/swap-sqrt2", [&] { return cover_err(mex_cover({{P, w}, {Q, -w}}), mex_cover({{Q, w}, {P, -w}, {U, kPi}})); });
    run("cover/uturn-slide", [&] {
        const double s = uniform(-3.0, 3.0);
        return cover_err(mex_cover({{T, s}, {P, w}, {Q, -w}}), mex_cover({{P, w}, {Q, -w}, {T, -s}}));
    });
    run("cover/uturn-pair", [&] {
        return cover_err(mex_cover({{P, w}, {Q, -w}, {P, -w}, {Q, w}}), exp_tilde(T * std::asinh(2 * w)));
    });
    run("cover/pqp-rewrite", [&] {
        const double r = uniform(-w + 0.05, 5.0);
        return cover_err(mex_cover({{P, r}, {Q, w}, {P, -w}}),
                         mex_cover({{Q, 2 / (r + w)}, {P, -(r + w)}, {Q, -r * w / (r + w)}}));
    });
    run("cover/pqp-sqrt2", [&] {
        return cover_err(mex_cover({{P, w}, {Q, w}, {P, -w}}), mex_cover({{Q, w / 2}, {P, -2 * w}, {Q, -w / 2}}));
    });

    // Adjoint identities, evaluated with the closed-form exp(ad).
    run("adjoint", [&] {
        double r = uniform(0.1, 3.0);
        if (engine() % 2) r = -r;
        const Eigen::Vector3d lhs1 = exp_ad_pq(Nilpotent::Q, r) * as_vector(-P);
        const Eigen::Vector3d rhs1 = exp_ad_pq(Nilpotent::P, 1 / r) * as_vector(Q * (r * r));
        const Eigen::Vector3d lhs2 = exp_ad_pq(Nilpotent::P, r) * as_vector(-Q);
        const Eigen::Vector3d rhs2 = exp_ad_pq(Nilpotent::Q, 1 / r) * as_vector(P * (r * r));
        const double scale = std::max(1.0, rhs1.lpNorm<Eigen::Infinity>());
        return std::max((lhs1 - rhs1).lpNorm<Eigen::Infinity>(), (lhs2 - rhs2).lpNorm<Eigen::Infinity>()) / scale;
    });
    run("parallel-transport", [&] {
        const double s = uniform(0.05, 4.0);
        const double r = s / (1 + s * s);
        return group_err(mex({{P, r}, {Q, -s}, {P, -s}, {Q, r}}), mex({{P, -r}, {Q, s}, {P, s}, {Q, -r}}));
    });

    // |u| < (2n-1) pi/2 for products of n exponentials from R conv(P, Q).
    run("cover/u-bound", [&] {
        const int n = 1 + static_cast<int>(engine() % 8);
        CoverElement g{};
        for (int j = 0; j < n; ++j) {
            const double lambda = uniform(0.0, 1.0);
            const double scale = uniform(-8.0, 8.0);
            g = compose(g, exp_tilde((P * lambda + Q * (1.0 - lambda)) * scale));
        }
        return std::abs(g.u) < (2 * n - 1) * kPi / 2 ? 0.0 : 1.0;
    });
    return report;
}

}  // namespace sl2
