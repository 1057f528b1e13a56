#pragma once

#include <array>
#include <string>

#include "sl2/algebra.hpp"
#include "sl2/cover.hpp"
#include "sl2/factorization.hpp"

namespace sl2 {

enum class Axis { None, H, T, U };

/// Element of the group {id, sH, sT, sU, i, isH, isT, isU}, stored as a tag.
struct SymmetryOp {
    bool invert = false;
    Axis axis = Axis::None;

    /// Position in the canonical order id, sH, sT, sU, i, isH, isT, isU.
    int index() const;
    std::string name() const;

    bool operator==(const SymmetryOp&) const = default;
};

/// Group product: (phi * psi)(g) = phi(psi(g)).
SymmetryOp operator*(const SymmetryOp& phi, const SymmetryOp& psi);

/// All eight elements in canonical order.
const std::array<SymmetryOp, 8>& all_symmetries();

/// Parses a tag produced by SymmetryOp::name().
SymmetryOp symmetry_from_name(const std::string& name);

GroupElement apply_group(const SymmetryOp& phi, const GroupElement& g);

/// Linear action on cover coordinates.
CoverElement apply_cover(const SymmetryOp& phi, const CoverElement& x);

/// Maps each generator by the induced automorphism; inversion reverses the
/// order and negates the controls.
Factorization apply_factorization(const SymmetryOp& phi, const Factorization& f);

}  // namespace sl2
