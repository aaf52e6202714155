#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "stabcsa/tower.hpp"

namespace stabcsa {

// Arithmetic mod a prime p < 2^32.
namespace fp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);  // throws DivisionByZero on 0

bool is_prime(std::uint64_t n);
// Smallest prime p >= from with p = 1 (mod 4).
std::uint64_t next_prime_1mod4(std::uint64_t from);
// A square root of -1 mod p; requires p = 1 (mod 4).
std::uint64_t sqrt_minus_one(std::uint64_t p);

}  // namespace fp

// Point of the affine specialization: x_l -> a_l (a nonzero square with a
// recorded root r_l), y_l -> b_l nonzero, other variables as assigned, and
// i -> a square root of -1 mod p.  p = 1 (mod 4) so that such a root exists.
struct SpecializationMap {
    std::uint64_t p = 0;
    std::uint64_t iota = 0;                        // iota^2 = -1 mod p
    std::map<Var, std::uint64_t> assignments;      // variable values
    std::map<std::uint32_t, std::uint64_t> roots;  // l -> r_l with r_l^2 = x_l value

    // Samples assignments for x_1..x_alpha, y_1..y_alpha uniformly, with the
    // x-values generated as squares of recorded nonzero roots.
    static SpecializationMap sample(std::uint64_t p, std::uint32_t alpha, std::mt19937_64& rng);

    std::uint64_t value_of(Var v) const;  // throws MissingAssignment
    std::uint64_t root_of(std::uint32_t l) const;  // throws MissingRoot
};

std::uint64_t specialize(const Gaussian& g, const SpecializationMap& s);
std::uint64_t specialize(const MultiPoly& p, const SpecializationMap& s);
// Throws DenominatorVanishes when the denominator specializes to 0.
std::uint64_t specialize(const RatFunc& r, const SpecializationMap& s);
std::uint64_t specialize(const TowerElement& e, const SpecializationMap& s);

}  // namespace stabcsa
