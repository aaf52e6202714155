#pragma once

#include "stabcsa/eigen.hpp"

namespace stabcsa {

enum class PairingKind { VWithBv, BvWithBv };

std::string pairing_kind_name(PairingKind k);

// Diagonalization of the pairing restricted to a generic eigenvector
// v = sum_I lambda_I e_I with fresh symbols lambda_I: the value equals
// sum_I c_I lambda_I^2 with no cross terms.
struct DiagonalQuadraticForm {
    PairingKind pairing;
    TowerElement eigenvalue;
    std::vector<std::size_t> labels;         // global basis indices I
    std::vector<TowerElement> coefficients;  // c_I, aligned with labels
};

// For symplectic tuples diagonalizes lambda -> Q(v, Bv); for orthogonal ones
// lambda -> Q(Bv, Bv).  Throws CrossTermsPresent if the result fails to be
// diagonal, which signals a convention error.
DiagonalQuadraticForm pairing_quadratic_form(const StableTupleCandidate& t,
                                             const EigenPair& pair);

}  // namespace stabcsa
