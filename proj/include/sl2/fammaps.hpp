#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sl2/algebra.hpp"
#include "sl2/cover.hpp"
#include "sl2/factorization.hpp"
#include "sl2/symmetry.hpp"

namespace sl2 {

enum class MapName { A3, A4, A5, C3, C4a, C4c, S3P, S3Q, S4P, S4Q, S5P, S5Q, S5a, S6, S7b, B3 };

/// Sufficient families: F (smallest domains), F1 and F2 (fewer maps).
enum class Family { F, F1, F2 };

/// Duration of a template slot: one of the parameters or the constant sqrt(2).
enum class Param { R, S, T, W };

struct Slot {
    Gen gen = Gen::P;
    int sign = 1;
    Param param = Param::R;
};

/// Subgroup whose images of the representative make up the orbit.
enum class OrbitGroup { Gamma, GammaTilde, SigmaT };

/// How the pivot entry of the middle factors depends on s.
enum class PivotKind { Polynomial, Hyperbolic };

struct MapDescriptor {
    MapName id = MapName::A3;
    std::string name;
    std::vector<Slot> slots;
    OrbitGroup orbit = OrbitGroup::Gamma;
    std::optional<SymmetryOp> stabilizer;
    PivotKind pivot = PivotKind::Polynomial;
    /// Polynomial pivot: sum poly[k] s^k.
    std::array<double, 4> poly{};
    /// Hyperbolic pivot: alpha cosh(s/2) + beta sinh(s/2).
    double alpha = 0.0;
    double beta = 0.0;
    /// Lower bound of the cost over the map's domain in family F.
    double min_cost = 0.0;
};

struct Params {
    double r = 0.0;
    double s = 0.0;
    double t = 0.0;
};

/// Parameter box plus the coupling constraints r <= s, t <= s.
struct Domain {
    std::array<double, 3> lo{};
    std::array<double, 3> hi{};
    bool r_le_s = false;
    bool t_le_s = false;
};

struct DomainCost {
    bool in_domain = false;
    double cost = 0.0;
};

const MapDescriptor& descriptor(MapName id);
const MapDescriptor& descriptor(const std::string& name);
const std::vector<MapName>& all_maps();
const std::vector<MapName>& family_maps(Family family);
Family family_from_name(const std::string& name);
std::string family_name(Family family);

/// Symmetries whose images of the representative form the orbit.
std::vector<SymmetryOp> orbit_ops(const MapDescriptor& m);

Domain domain(const MapDescriptor& m, Family family);

/// Template filled with (r, s, t); negative parameters flip the control sign.
Factorization factorization(const MapDescriptor& m, const Params& p);

GroupElement evaluate(const MapDescriptor& m, const Params& p);
CoverElement evaluate_cover(const MapDescriptor& m, const Params& p);

/// Pivot entry of the middle factors as a function of s.
double pivot_value(const MapDescriptor& m, double s);

DomainCost domain_and_cost(const MapDescriptor& m, const Params& p, Family family, double tol = 1e-9);

/// All real (r, s, t) with evaluate(m, r, s, t) = g, each verified to
/// tol * max(1, |g|_max). Domain filtering is left to the caller.
std::vector<Params> invert(const MapDescriptor& m, const GroupElement& g, double tol = 1e-9);

/// Root of s^3 - 2s = y in [sqrt 2, sqrt 3] for y in [0, sqrt 3] +- 1e-9.
double solve_cubic_monotone(double y);

}  // namespace sl2
