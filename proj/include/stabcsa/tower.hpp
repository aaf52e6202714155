#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "stabcsa/ratfunc.hpp"

namespace stabcsa {

// Element of K = F[sqrt(x_1), ..., sqrt(x_a)] on the subset-indexed basis:
// coefficient of prod_{l in S} sqrt(x_l) is stored under the bitmask of S
// (bit l-1 set means sqrt(x_l) is a factor).  Multiplication uses
// sqrt(x_l)^2 = x_l.  No zero coefficients are stored.
class TowerElement {
public:
    using SlotMap = std::map<std::uint32_t, RatFunc>;

    TowerElement() = default;
    TowerElement(long v) { set_slot(0, RatFunc(v)); }  // NOLINT
    explicit TowerElement(const Gaussian& c) { set_slot(0, RatFunc(c)); }
    explicit TowerElement(const RatFunc& r) { set_slot(0, r); }

    static TowerElement sqrt_x(std::uint32_t l);
    static TowerElement variable(Var v, std::uint32_t exp = 1) {
        return TowerElement(RatFunc::variable(v, exp));
    }

    const SlotMap& slots() const { return slots_; }
    void set_slot(std::uint32_t mask, const RatFunc& value);
    RatFunc slot(std::uint32_t mask) const;

    bool is_zero() const { return slots_.empty(); }
    bool is_rational() const {
        return slots_.empty() || (slots_.size() == 1 && slots_.begin()->first == 0);
    }
    RatFunc rational_part() const { return slot(0); }

    // Bitmask union of all square roots present.
    std::uint32_t root_mask() const;

    TowerElement operator-() const;
    TowerElement operator+(const TowerElement& o) const;
    TowerElement operator-(const TowerElement& o) const;
    TowerElement operator*(const TowerElement& o) const;
    TowerElement operator/(const TowerElement& o) const;
    TowerElement& operator+=(const TowerElement& o) { return *this = *this + o; }
    TowerElement& operator-=(const TowerElement& o) { return *this = *this - o; }
    TowerElement& operator*=(const TowerElement& o) { return *this = *this * o; }
    TowerElement& operator/=(const TowerElement& o) { return *this = *this / o; }

    bool operator==(const TowerElement& o) const { return slots_ == o.slots_; }
    bool operator!=(const TowerElement& o) const { return !(*this == o); }

    // Throws NonInvertible on zero.
    TowerElement inverse() const;

    std::string str() const;

private:
    SlotMap slots_;
};

TowerElement operator*(const RatFunc& c, const TowerElement& e);

}  // namespace stabcsa
