#pragma once

#include <string>

#include "stabcsa/multipoly.hpp"

namespace stabcsa {

// Rational function num/den over Q(i).  Kept in canonical form:
// gcd(num, den) = 1 and den monic under the fixed monomial order.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long v) : num_(v), den_(1) {}  // NOLINT
    explicit RatFunc(const Gaussian& c) : num_(c), den_(1) {}
    explicit RatFunc(MultiPoly num) : num_(std::move(num)), den_(1) {}
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc variable(Var v, std::uint32_t exp = 1) {
        return RatFunc(MultiPoly::variable(v, exp));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;

    std::string str() const;

private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

}  // namespace stabcsa
