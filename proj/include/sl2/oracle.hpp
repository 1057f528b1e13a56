#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2/algebra.hpp"

namespace sl2 {

/// Local search settings for the brute-force upper bound.
struct OracleOptions {
    int max_factors = 6;
    int restarts = 16;
    std::uint64_t seed = 1;
    /// Generator types; each factor is exp(d X) with signed duration d and cost |d|.
    /// Empty means the canonical types P, Q, T/2. The search runs on the set
    /// rescaled so that max |tr(XY)| = 1, which makes it scale invariant.
    std::vector<AlgebraElement> generators;
};

struct OracleResult {
    /// Best feasible cost, +infinity if no restart converged.
    double cost = 0.0;
    /// Signed durations and generator indices of the best word.
    std::vector<double> durations;
    std::vector<int> types;
};

/// Multi-start penalty search over all type patterns of length max_factors
/// without repeated neighbours. Deterministic for a given seed.
OracleResult refine_upper_bound(const GroupElement& g, const OracleOptions& options);

double refine_upper_bound(const GroupElement& g, int max_factors, int restarts, std::uint64_t seed);

struct IdentityCheck {
    std::string name;
    int samples = 0;
    int failures = 0;
    double max_error = 0.0;
    bool passed() const { return failures == 0 && samples > 0; }
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool passed() const;
    /// JSON document with one entry per check.
    std::string to_json() const;
};

/// Numerical check of the rewriting identities in SL(2) and in the cover.
IdentityReport identity_suite(std::uint64_t seed, int samples = 50);

}  // namespace sl2
