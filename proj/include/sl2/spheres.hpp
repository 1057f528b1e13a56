#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "sl2/cover.hpp"
#include "sl2/fammaps.hpp"
#include "sl2/symmetry.hpp"

namespace sl2 {

/// Coordinates of sphere vertices: unwrapped cover or SL(2) with u in (-pi, pi].
enum class SphereGroup { SL2, Cover };

/// Image of one map slice {cost = c} under one orbit symmetry.
struct SpherePatch {
    std::string map_name;
    SymmetryOp symmetry;
    double cost = 0.0;
    std::vector<CoverElement> vertices;
    /// Parameters of each vertex.
    std::vector<Params> params;
    std::vector<std::array<int, 3>> triangles;
    bool filtered_optimal = false;
};

/// Meshes the sphere {g : T(g) = c} by map patches. For every map of the
/// family and every orbit symmetry, r is eliminated from the cost form and
/// (s, t) run over a resolution x resolution grid of the level set within the
/// domain. Patches are sorted by map name, then symmetry index.
std::vector<SpherePatch> build_sphere(double c, int resolution, SphereGroup group = SphereGroup::SL2,
                                      Family family = Family::F);

/// Drops vertices whose distance is below c - tol together with every
/// triangle that touches them. Patches that lose all triangles are removed.
std::vector<SpherePatch> filter_optimal(const std::vector<SpherePatch>& patches, double tol);

/// Largest |u| over all vertices.
double max_abs_u(const std::vector<SpherePatch>& patches);

/// Wavefront text: "v h t u" lines, then "f i j k" lines with 1-based indices,
/// one comment line per patch.
void write_obj(std::ostream& out, const std::vector<SpherePatch>& patches);

/// One row per triangle: map, symmetry, then the nine vertex coordinates.
void write_triangle_csv(std::ostream& out, const std::vector<SpherePatch>& patches);

}  // namespace sl2
