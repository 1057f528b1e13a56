#include "sl2/symmetry.hpp"

#include <algorithm>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

// Axes form a Klein four-group with H*T = U.
Axis combine(Axis x, Axis y) {
    if (x == Axis::None) return y;
    if (y == Axis::None) return x;
    if (x == y) return Axis::None;
    const int mask = (1 << static_cast<int>(x)) | (1 << static_cast<int>(y));
    for (Axis z : {Axis::H, Axis::T, Axis::U}) {
        if ((mask & (1 << static_cast<int>(z))) == 0) return z;
    }
    return Axis::None;
}

Factor map_factor(Axis axis, Factor f) {
    switch (axis) {
        case Axis::None:
            break;
        case Axis::H:
            f.sign = -f.sign;
            break;
        case Axis::T:
            if (f.gen == Gen::P) {
                f.gen = Gen::Q;
            } else if (f.gen == Gen::Q) {
                f.gen = Gen::P;
            } else if (f.gen == Gen::HalfU) {
                f.sign = -f.sign;
            }
            break;
        case Axis::U:
            if (f.gen == Gen::P) {
                f.gen = Gen::Q;
                f.sign = -f.sign;
            } else if (f.gen == Gen::Q) {
                f.gen = Gen::P;
                f.sign = -f.sign;
            } else if (f.gen == Gen::HalfT) {
                f.sign = -f.sign;
            }
            break;
    }
    return f;
}

}  // namespace

int SymmetryOp::index() const { return (invert ? 4 : 0) + static_cast<int>(axis); }

std::string SymmetryOp::name() const {
    static const char* const kAxis[] = {"id", "sH", "sT", "sU"};
    if (!invert) return kAxis[static_cast<int>(axis)];
    if (axis == Axis::None) return "i";
    return std::string("i") + kAxis[static_cast<int>(axis)];
}

SymmetryOp operator*(const SymmetryOp& phi, const SymmetryOp& psi) {
    return {phi.invert != psi.invert, combine(phi.axis, psi.axis)};
}

const std::array<SymmetryOp, 8>& all_symmetries() {
    static const std::array<SymmetryOp, 8> ops = {
        SymmetryOp{false, Axis::None}, SymmetryOp{false, Axis::H},
        SymmetryOp{false, Axis::T},    SymmetryOp{false, Axis::U},
        SymmetryOp{true, Axis::None},  SymmetryOp{true, Axis::H},
        SymmetryOp{true, Axis::T},     SymmetryOp{true, Axis::U},
    };
    return ops;
}

SymmetryOp symmetry_from_name(const std::string& name) {
    for (const auto& op : all_symmetries()) {
        if (op.name() == name) return op;
    }
    throw OutOfRange("unknown symmetry tag '" + name + "'");
}

GroupElement apply_group(const SymmetryOp& phi, const GroupElement& g) {
    require_unimodular(g);
    const double a = g.a, b = g.b, c = g.c, d = g.d;
    GroupElement r = g;
    switch (phi.axis) {
        case Axis::None: break;
        case Axis::H: r = {a, -b, -c, d}; break;
        case Axis::T: r = {d, c, b, a}; break;
        case Axis::U: r = {d, -c, -b, a}; break;
    }
    return phi.invert ? r.adjugate() : r;
}

CoverElement apply_cover(const SymmetryOp& phi, const CoverElement& x) {
    CoverElement r = x;
    switch (phi.axis) {
        case Axis::None: break;
        case Axis::H: r = {x.h, -x.t, -x.u}; break;
        case Axis::T: r = {-x.h, x.t, -x.u}; break;
        case Axis::U: r = {-x.h, -x.t, x.u}; break;
    }
    return phi.invert ? -r : r;
}

Factorization apply_factorization(const SymmetryOp& phi, const Factorization& f) {
    Factorization out;
    out.factors.reserve(f.factors.size());
    for (const auto& x : f.factors) out.factors.push_back(map_factor(phi.axis, x));
    if (phi.invert) {
        std::reverse(out.factors.begin(), out.factors.end());
        for (auto& x : out.factors) x.sign = -x.sign;
    }
    return out;
}

}  // namespace sl2
