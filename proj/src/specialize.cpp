#include "stabcsa/specialize.hpp"

#include "stabcsa/errors.hpp"

namespace stabcsa {

namespace fp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a + p - b % p) % p;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw DivisionByZero("inverse of 0 mod p");
    return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t next_prime_1mod4(std::uint64_t from) {
    std::uint64_t n = from < 5 ? 5 : from;
    while (n % 4 != 1) ++n;
    while (!is_prime(n)) n += 4;
    return n;
}

std::uint64_t sqrt_minus_one(std::uint64_t p) {
    if (p % 4 != 1) throw InputError("sqrt(-1) mod p requires p = 1 (mod 4)");
    for (std::uint64_t g = 2; g < p; ++g) {
        std::uint64_t c = pow(g, (p - 1) / 4, p);
        if (mul(c, c, p) == p - 1) return c;
    }
    throw InputError("no square root of -1 found");  // unreachable for prime p = 1 mod 4
}

}  // namespace fp

SpecializationMap SpecializationMap::sample(std::uint64_t p, std::uint32_t alpha,
                                            std::mt19937_64& rng) {
    SpecializationMap s;
    s.p = p;
    s.iota = fp::sqrt_minus_one(p);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, p - 1);
    for (std::uint32_t l = 1; l <= alpha; ++l) {
        std::uint64_t r = nonzero(rng);
        s.roots[l] = r;
        s.assignments[var_x(l)] = fp::mul(r, r, p);
        s.assignments[var_y(l)] = nonzero(rng);
    }
    return s;
}

std::uint64_t SpecializationMap::value_of(Var v) const {
    auto it = assignments.find(v);
    if (it == assignments.end())
        throw MissingAssignment("no specialization value for " + var_name(v));
    return it->second;
}

std::uint64_t SpecializationMap::root_of(std::uint32_t l) const {
    auto it = roots.find(l);
    if (it == roots.end())
        throw MissingRoot("no recorded square root for x" + std::to_string(l));
    return it->second;
}

namespace {

std::uint64_t specialize_rational(const Rational& r, std::uint64_t p) {
    mpz_class num = r.get_num() % static_cast<long>(p);
    mpz_class den = r.get_den() % static_cast<long>(p);
    std::uint64_t n = (num.get_si() % static_cast<long>(p) + static_cast<long>(p)) % p;
    std::uint64_t d = (den.get_si() % static_cast<long>(p) + static_cast<long>(p)) % p;
    if (d == 0) throw DenominatorVanishes("rational coefficient has denominator divisible by p");
    return fp::mul(n, fp::inv(d, p), p);
}

}  // namespace

std::uint64_t specialize(const Gaussian& g, const SpecializationMap& s) {
    std::uint64_t re = specialize_rational(g.re(), s.p);
    std::uint64_t im = specialize_rational(g.im(), s.p);
    return fp::add(re, fp::mul(im, s.iota, s.p), s.p);
}

std::uint64_t specialize(const MultiPoly& poly, const SpecializationMap& s) {
    std::uint64_t acc = 0;
    for (const auto& [m, c] : poly.terms()) {
        std::uint64_t term = specialize(c, s);
        for (const auto& [v, e] : m)
            term = fp::mul(term, fp::pow(s.value_of(v), e, s.p), s.p);
        acc = fp::add(acc, term, s.p);
    }
    return acc;
}

std::uint64_t specialize(const RatFunc& r, const SpecializationMap& s) {
    std::uint64_t den = specialize(r.den(), s);
    if (den == 0) throw DenominatorVanishes("denominator vanishes at the specialization point");
    return fp::mul(specialize(r.num(), s), fp::inv(den, s.p), s.p);
}

std::uint64_t specialize(const TowerElement& e, const SpecializationMap& s) {
    std::uint64_t acc = 0;
    for (const auto& [mask, v] : e.slots()) {
        std::uint64_t term = specialize(v, s);
        for (std::uint32_t l = 1, m = mask; m; ++l, m >>= 1)
            if (m & 1u) term = fp::mul(term, s.root_of(l), s.p);
        acc = fp::add(acc, term, s.p);
    }
    return acc;
}

}  // namespace stabcsa
