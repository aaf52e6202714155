#pragma once

#include "stabcsa/construct.hpp"

namespace stabcsa {

// One basis vector e_{i_1} x ... x e_{i_a} x f_m of an eigenspace of the
// first tuple element, with the parity/flip bookkeeping of the pairing step.
struct EigenBasisVector {
    std::size_t global_index;        // position in the Kronecker basis
    std::vector<std::uint8_t> parities;  // b_k = 1 iff slot k uses the even vector e_{2k}
    std::size_t m;                   // matrix-slot index, 1-based
    std::size_t flip_index;          // index of e_{bar i_1} x ... x e_{bar i_a} x f_m
};

struct EigenPair {
    TowerElement eigenvalue;
    std::vector<EigenBasisVector> basis;
};

struct EigenSystem {
    std::vector<EigenPair> pairs;
};

// Exact eigenpairs of the first element, which is diagonal on the Kronecker
// basis for every built tuple.  Throws NotDiagonalizable otherwise.
EigenSystem eigen_system(const StableTupleCandidate& t);

}  // namespace stabcsa
