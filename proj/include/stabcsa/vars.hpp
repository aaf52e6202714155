#pragma once

#include <cstdint>
#include <string>

#include "stabcsa/errors.hpp"

namespace stabcsa {

// Polynomial variables, identified by kind and 1-based index.  The raw
// encoding gives the fixed variable order used by the monomial order:
// x1 < x2 < ... < y1 < ... < t1 < ... < aux < lambda(...).
using Var = std::uint32_t;

enum class VarKind : std::uint8_t {
    X = 0,       // the x_l carrying the square roots
    Y = 1,       // the y_l
    T = 2,       // generic independent variables (Pfister slots)
    Aux = 3,     // scratch indeterminates (e.g. the char-poly variable)
    Lambda = 4,  // fresh symbols adjoined for generic eigenvectors
    S = 5,       // the roots sqrt(x_l) viewed as transcendentals of K
};

constexpr Var make_var(VarKind kind, std::uint32_t index) {
    return (static_cast<Var>(kind) << 24) | (index & 0x00FFFFFFu);
}

constexpr VarKind var_kind(Var v) { return static_cast<VarKind>(v >> 24); }
constexpr std::uint32_t var_index(Var v) { return v & 0x00FFFFFFu; }

constexpr Var var_x(std::uint32_t l) { return make_var(VarKind::X, l); }
constexpr Var var_y(std::uint32_t l) { return make_var(VarKind::Y, l); }
constexpr Var var_t(std::uint32_t n) { return make_var(VarKind::T, n); }
constexpr Var var_aux(std::uint32_t n) { return make_var(VarKind::Aux, n); }
constexpr Var var_lambda(std::uint32_t n) { return make_var(VarKind::Lambda, n); }
constexpr Var var_s(std::uint32_t l) { return make_var(VarKind::S, l); }

inline std::string var_name(Var v) {
    std::uint32_t idx = var_index(v);
    switch (var_kind(v)) {
        case VarKind::X: return "x" + std::to_string(idx);
        case VarKind::Y: return "y" + std::to_string(idx);
        case VarKind::T: return "t" + std::to_string(idx);
        case VarKind::Aux: return "X" + std::to_string(idx);
        case VarKind::Lambda: return "l" + std::to_string(idx);
        case VarKind::S: return "s" + std::to_string(idx);
    }
    throw InputError("unknown variable kind");
}

}  // namespace stabcsa
