#pragma once

#include <string>
#include <vector>

#include "sl2/algebra.hpp"
#include "sl2/cover.hpp"

namespace sl2 {

/// Generators of the controls: P, Q, T/2 and U/2.
enum class Gen { P, Q, HalfT, HalfU };

/// One factor exp(duration * sign * gen).
struct Factor {
    Gen gen = Gen::P;
    int sign = 1;
    double duration = 0.0;

    AlgebraElement control() const;
    bool same_control(const Factor& o) const { return gen == o.gen && sign == o.sign; }
};

struct Factorization {
    std::vector<Factor> factors;

    /// Sum of durations.
    double cost() const;
    std::size_t size() const { return factors.size(); }
};

AlgebraElement generator(Gen g);

/// Name of a signed control, e.g. "+P", "-Q", "+T/2".
std::string control_name(const Factor& f);

/// Product of the factor exponentials, left to right.
GroupElement evaluate(const Factorization& f);

/// Same product in the cover, so that u is unwrapped.
CoverElement evaluate_cover(const Factorization& f);

/// Makes durations nonnegative by flipping signs, drops durations with
/// |d| <= zero_tol and merges consecutive factors with equal control.
Factorization normalized(const Factorization& f, double zero_tol = 1e-13);

}  // namespace sl2
