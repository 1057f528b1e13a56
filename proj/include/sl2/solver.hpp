#pragma once

#include <string>

#include "sl2/algebra.hpp"
#include "sl2/cover.hpp"
#include "sl2/factorization.hpp"
#include "sl2/fammaps.hpp"
#include "sl2/symmetry.hpp"

namespace sl2 {

enum class GroupKind { SL2, PSL2 };

struct DistanceResult {
    double cost = 0.0;
    Factorization factorization;
    /// Empty for the identity, which needs no factor.
    std::string map_name;
    SymmetryOp symmetry;
    Params params;
    GroupKind group = GroupKind::SL2;
    /// PSL(2) only: the factorization reaches -g instead of g.
    bool negated = false;
};

/// Minimal factorization cost of g in SL(2) and an optimal factorization.
DistanceResult distance_sl2(const GroupElement& g, Family family = Family::F1);

/// min over the two lifts +-g.
DistanceResult distance_psl2(const GroupElement& g, Family family = Family::F1);

/// Two rank-one traceless generators; the control set is conv(+-S1, +-S2).
struct SlipPair {
    AlgebraElement s1;
    AlgebraElement s2;
};

struct TwoSlipNormalization {
    double mu = 1.0;
    GroupElement g0;
};

/// mu and g0 with Ad(g0^-1) S1 = mu P and Ad(g0^-1) S2 = -mu Q, after
/// moving each slip to the upper cone sheet (u > 0) by negation.
TwoSlipNormalization normalize_two_slip(const SlipPair& pair);

/// Distance for the two-slip control set: mu^-1 T(g0^-1 g g0).
double distance_two_slip(const SlipPair& pair, const GroupElement& g, Family family = Family::F1);

/// Word of n alternating factors rP, -sQ, sP, -sQ, ... whose last factor
/// has duration t.
Factorization alternating_word(int n, double r, double s, double t);

struct CentralAlt {
    double s = 0.0;
    CoverElement element;
};

/// s_n = 2 cos(pi/n) and the cover value of the alternating word A_n(s_n).
CentralAlt central_alt(int n);

/// Polynomial p_n whose root 1/2 s_n determines the central alternating words.
double eval_pn(int n, double xi);

/// Rational function mu_N(s), N = 1..5.
double eval_muN(int N, double s);

}  // namespace sl2
