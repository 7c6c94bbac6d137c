#pragma once
// Variables of the polynomial contexts. One global total order covers every
// kind so that term layouts, default monomial orders and printed forms are
// reproducible everywhere:
//
//   t < x1 < ... < xn < u1 < ... < un
//     < derivative variables xi^(j), compared by (index, order)
//     < tower variables c_{level,index}, compared by (level, index)
//     < internal aux variables
//
// Within a fixed pair context x_i^(0) is identified with x_i and x_i^(1)
// with u_i, so Deriv carries only orders j >= 1 (order 0 normalizes to Base).

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "taugen/errors.hpp"

namespace taugen {

enum class VarKind : std::uint8_t {
    Param = 0, // the field parameter t
    Base = 1,  // x_i
    Prolong = 2, // u_i
    Deriv = 3, // x_i^(j), j >= 1
    Tower = 4, // c_{level,index}
    Aux = 5,   // internal (saturation inverses, bundle parameters, ...)
};

struct Variable {
    VarKind kind = VarKind::Base;
    std::uint32_t index = 1; // i for Base/Prolong/Deriv/Aux; column for Tower
    std::uint32_t order = 0; // derivative order for Deriv; level for Tower

    static Variable t() { return {VarKind::Param, 0, 0}; }
    static Variable x(std::uint32_t i) { return {VarKind::Base, i, 0}; }
    static Variable u(std::uint32_t i) { return {VarKind::Prolong, i, 0}; }
    static Variable deriv(std::uint32_t i, std::uint32_t j) {
        if (j == 0) return x(i);
        return {VarKind::Deriv, i, j};
    }
    static Variable tower(std::uint32_t level, std::uint32_t i) {
        return {VarKind::Tower, i, level};
    }
    static Variable aux(std::uint32_t i) { return {VarKind::Aux, i, 0}; }

    // key realizing the global order: (kind, primary, secondary)
    std::uint64_t key() const {
        std::uint64_t primary, secondary;
        switch (kind) {
            case VarKind::Deriv: primary = index; secondary = order; break; // (index, order)
            case VarKind::Tower: primary = order; secondary = index; break; // (level, index)
            default: primary = index; secondary = 0; break;
        }
        return (static_cast<std::uint64_t>(kind) << 56) | (primary << 28) | secondary;
    }

    auto operator<=>(const Variable& o) const { return key() <=> o.key(); }
    bool operator==(const Variable& o) const { return key() == o.key(); }

    std::string name() const {
        switch (kind) {
            case VarKind::Param: return "t";
            case VarKind::Base: return "x" + std::to_string(index);
            case VarKind::Prolong: return "u" + std::to_string(index);
            case VarKind::Deriv:
                if (order == 1) return "x" + std::to_string(index) + "'";
                if (order == 2) return "x" + std::to_string(index) + "''";
                return "x" + std::to_string(index) + "^(" + std::to_string(order) + ")";
            case VarKind::Tower:
                return "c" + std::to_string(order) + "_" + std::to_string(index);
            case VarKind::Aux: return "z" + std::to_string(index);
        }
        throw InternalError("unknown variable kind");
    }
};

// ambient context helpers
inline std::vector<Variable> x_block(std::uint32_t n) {
    std::vector<Variable> v;
    for (std::uint32_t i = 1; i <= n; ++i) v.push_back(Variable::x(i));
    return v;
}
inline std::vector<Variable> xu_block(std::uint32_t n) {
    std::vector<Variable> v = x_block(n);
    for (std::uint32_t i = 1; i <= n; ++i) v.push_back(Variable::u(i));
    return v;
}

} // namespace taugen
