#include "sl2/factorization.hpp"

#include <algorithm>
#include <cmath>

namespace sl2 {

AlgebraElement generator(Gen g) {
    switch (g) {
        case Gen::P: return kP;
        case Gen::Q: return kQ;
        case Gen::HalfT: return kT * 0.5;
        case Gen::HalfU: return kU * 0.5;
    }
    return {};
}

AlgebraElement Factor::control() const { return generator(gen) * static_cast<double>(sign); }

double Factorization::cost() const {
    // Summing in sorted order makes the cost invariant under reordering.
    std::vector<double> d;
    d.reserve(factors.size());
    for (const auto& f : factors) d.push_back(f.duration);
    std::sort(d.begin(), d.end());
    double c = 0.0;
    for (double x : d) c += x;
    return c;
}

std::string control_name(const Factor& f) {
    std::string s = f.sign < 0 ? "-" : "+";
    switch (f.gen) {
        case Gen::P: return s + "P";
        case Gen::Q: return s + "Q";
        case Gen::HalfT: return s + "T/2";
        case Gen::HalfU: return s + "U/2";
    }
    return s;
}

GroupElement evaluate(const Factorization& f) {
    GroupElement g = GroupElement::identity();
    for (const auto& x : f.factors) g = g * exp_matrix(x.control() * x.duration);
    return g;
}

CoverElement evaluate_cover(const Factorization& f) {
    CoverElement g{};
    for (const auto& x : f.factors) g = compose(g, exp_tilde(x.control() * x.duration));
    return g;
}

Factorization normalized(const Factorization& f, double zero_tol) {
    Factorization out;
    for (Factor x : f.factors) {
        if (x.duration < 0.0) {
            x.duration = -x.duration;
            x.sign = -x.sign;
        }
        if (x.duration <= zero_tol) continue;
        if (!out.factors.empty() && out.factors.back().same_control(x)) {
            out.factors.back().duration += x.duration;
        } else {
            out.factors.push_back(x);
        }
    }
    return out;
}

}  // namespace sl2
