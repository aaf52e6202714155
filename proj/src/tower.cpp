#include "stabcsa/tower.hpp"

#include <bit>

#include "stabcsa/errors.hpp"

namespace stabcsa {

TowerElement TowerElement::sqrt_x(std::uint32_t l) {
    if (l == 0 || l > 24) throw InputError("sqrt index out of range");
    TowerElement e;
    e.slots_[1u << (l - 1)] = RatFunc(1);
    return e;
}

void TowerElement::set_slot(std::uint32_t mask, const RatFunc& value) {
    if (value.is_zero())
        slots_.erase(mask);
    else
        slots_[mask] = value;
}

RatFunc TowerElement::slot(std::uint32_t mask) const {
    auto it = slots_.find(mask);
    return it == slots_.end() ? RatFunc() : it->second;
}

std::uint32_t TowerElement::root_mask() const {
    std::uint32_t m = 0;
    for (const auto& [mask, v] : slots_) m |= mask;
    return m;
}

TowerElement TowerElement::operator-() const {
    TowerElement out;
    for (const auto& [mask, v] : slots_) out.slots_[mask] = -v;
    return out;
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
    TowerElement out = *this;
    for (const auto& [mask, v] : o.slots_) {
        auto it = out.slots_.find(mask);
        if (it == out.slots_.end()) {
            out.slots_[mask] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) out.slots_.erase(it);
        }
    }
    return out;
}

TowerElement TowerElement::operator-(const TowerElement& o) const { return *this + (-o); }

TowerElement TowerElement::operator*(const TowerElement& o) const {
    TowerElement out;
    for (const auto& [ma, va] : slots_) {
        for (const auto& [mb, vb] : o.slots_) {
            // (prod_{S} s_l)(prod_{T} s_l) = prod_{S cap T} x_l * prod_{S xor T} s_l
            RatFunc v = va * vb;
            std::uint32_t common = ma & mb;
            if (common) {
                MultiPoly xprod(1);
                for (std::uint32_t l = 1; common; ++l, common >>= 1)
                    if (common & 1u) xprod *= MultiPoly::variable(var_x(l));
                v *= RatFunc(xprod);
            }
            std::uint32_t mask = ma ^ mb;
            auto it = out.slots_.find(mask);
            if (it == out.slots_.end()) {
                if (!v.is_zero()) out.slots_[mask] = v;
            } else {
                it->second += v;
                if (it->second.is_zero()) out.slots_.erase(it);
            }
        }
    }
    return out;
}

TowerElement TowerElement::inverse() const {
    if (is_zero()) throw NonInvertible("inverse of zero tower element");
    std::uint32_t roots = root_mask();
    if (roots == 0) {
        TowerElement out;
        out.slots_[0] = slots_.begin()->second.inverse();
        return out;
    }
    // Split on the highest square root present: a = a0 + s*a1 with s^2 = x_l.
    // Then a * (a0 - s*a1) = a0^2 - x_l*a1^2 lives one level down the tower.
    std::uint32_t bit = 1u << (31 - std::countl_zero(roots));
    std::uint32_t l = 32 - std::countl_zero(roots);
    TowerElement a0, a1;
    for (const auto& [mask, v] : slots_) {
        if (mask & bit)
            a1.slots_[mask & ~bit] = v;
        else
            a0.slots_[mask] = v;
    }
    TowerElement xl = TowerElement(RatFunc::variable(var_x(l)));
    TowerElement norm = a0 * a0 - xl * (a1 * a1);
    if (norm.is_zero())
        throw NonInvertible("tower element with vanishing conjugate norm");
    TowerElement s;
    s.slots_[bit] = RatFunc(1);
    return (a0 - s * a1) * norm.inverse();
}

TowerElement TowerElement::operator/(const TowerElement& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero tower element");
    return *this * o.inverse();
}

std::string TowerElement::str() const {
    if (slots_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mask, v] : slots_) {
        std::string piece = v.str();
        bool needs_paren =
            piece.find('+') != std::string::npos || piece.find(" - ") != std::string::npos;
        if (mask != 0) {
            if (piece == "1")
                piece.clear();
            else if (needs_paren)
                piece = "(" + piece + ")";
            for (std::uint32_t l = 1, m = mask; m; ++l, m >>= 1) {
                if (!(m & 1u)) continue;
                if (!piece.empty()) piece += "*";
                piece += "sqrt(x" + std::to_string(l) + ")";
            }
        }
        if (first) {
            out = piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

TowerElement operator*(const RatFunc& c, const TowerElement& e) {
    return TowerElement(c) * e;
}

}  // namespace stabcsa
