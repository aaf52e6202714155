#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stabcsa/gaussian.hpp"
#include "stabcsa/vars.hpp"

namespace stabcsa {

// Exponent vector, sorted by variable, no zero exponents.
using Monomial = std::vector<std::pair<Var, std::uint32_t>>;

std::uint64_t mono_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, assuming a | b
std::string mono_str(const Monomial& m);

// Graded-lexicographic order: total degree first, then lex with smaller
// variables ranked higher.  Fixed once; all canonical forms depend on it.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Q(i).  No zero coefficients are stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Gaussian, MonoLess>;

    MultiPoly() = default;
    MultiPoly(long v) { if (v != 0) terms_[Monomial{}] = Gaussian(v); }  // NOLINT
    explicit MultiPoly(const Gaussian& c) { if (!c.is_zero()) terms_[Monomial{}] = c; }

    static MultiPoly variable(Var v, std::uint32_t exp = 1);
    static MultiPoly monomial(const Monomial& m, const Gaussian& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() &&
               terms_.begin()->second.is_one();
    }
    bool is_monomial() const { return terms_.size() == 1; }

    Gaussian constant_value() const;  // requires is_constant()

    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const;  // 0 for the zero polynomial
    std::uint32_t degree_in(Var v) const;
    std::set<Var> variables() const;
    bool contains_var(Var v) const;

    // Leading term under the fixed graded-lex order.
    const Monomial& leading_monomial() const;
    const Gaussian& leading_coefficient() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const Gaussian& c) const;
    MultiPoly mul_monomial(const Monomial& m, const Gaussian& c) const;

    // Substitute 0 for v.
    MultiPoly reduce_mod_var(Var v) const;
    // Exact division by v; requires divisible_by_var(v).
    MultiPoly divide_by_var(Var v) const;
    bool divisible_by_var(Var v) const;

    // Exact polynomial division; throws if the division is not exact.
    MultiPoly divide_exact(const MultiPoly& divisor) const;
    // True (with quotient) when divisor divides *this exactly.
    bool try_divide(const MultiPoly& divisor, MultiPoly& quotient) const;

    void add_term(const Monomial& m, const Gaussian& c);

    std::string str() const;

private:
    TermMap terms_;
};

MultiPoly operator*(const Gaussian& c, const MultiPoly& p);

// GCD in Q(i)[vars], normalized monic under the fixed monomial order.
// gcd(0,0) = 0; otherwise the result's leading coefficient is 1.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_gcd(const std::vector<MultiPoly>& ps);

}  // namespace stabcsa
