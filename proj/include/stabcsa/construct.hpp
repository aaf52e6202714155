#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabcsa/involution.hpp"

namespace stabcsa {

enum class Group { Sp, SO };

std::string group_name(Group g);

// Parameters of the explicit constructions: epsilon = 2^alpha * s with s odd,
// and g >= 2 skew elements (the second through last coincide).
struct ConstructionParams {
    Group group = Group::Sp;
    std::uint32_t alpha = 1;
    std::uint32_t s = 1;
    std::uint32_t g = 2;
};

enum class CaseTag { SpOdd, SpEven, SoOdd, SoEven, SoPow2, Foreign };

std::string case_tag_name(CaseTag tag);

// The s x s companions of the orthogonal constructions.
// M1 is symmetric, M2 is skew.
struct AuxMatrices {
    SqMatrix M1;
    SqMatrix M2;
};

AuxMatrices aux_matrices(std::size_t s);

struct StableTupleCandidate {
    std::size_t epsilon = 0;
    GramMatrix gram;
    InvolutionKind kind;
    std::vector<SqMatrix> elements;  // lambda_1 = A, lambda_2 = ... = lambda_g = B
    CaseTag tag;
    ConstructionParams params;

    // Effective tensor shape: alpha_eff quaternion slots followed by an
    // s_eff-dimensional matrix slot.  standard_form means the first element
    // is i_1 x ... x i_alpha_eff x diag(1..s_eff) on the Kronecker basis.
    std::uint32_t alpha_eff = 0;
    std::uint32_t s_eff = 1;
    bool standard_form = false;

    const SqMatrix& first() const { return elements.at(0); }
    const SqMatrix& second() const { return elements.at(1); }
};

// Builds the candidate tuple for the requested case.  Throws InvalidCase on
// parameters outside the five supported families.
StableTupleCandidate build_tuple(const ConstructionParams& p);

// Makes a tuple from raw parts (foreign input, e.g. planted examples).
StableTupleCandidate make_tuple(GramMatrix gram, std::vector<SqMatrix> elements);

// Empty on success; otherwise the 1-based index of the first element with
// apply_involution(gram, lambda_i) != -lambda_i.
std::optional<std::size_t> verify_skew(const StableTupleCandidate& t);

}  // namespace stabcsa
