#pragma once

#include <memory>
#include <vector>

#include "stabcsa/multipoly.hpp"

namespace stabcsa {

struct DuplicateClass : std::runtime_error {
    explicit DuplicateClass(const std::string& what) : std::runtime_error(what) {}
};

// The 2^n-dimensional form with coefficients t_I = prod_{i in I} t_i,
// indexed by the bitmask of I (bit i-1 set means i in I).
struct PfisterForm {
    std::uint32_t n = 0;

    std::size_t size() const { return std::size_t{1} << n; }
    Monomial coefficient(std::uint32_t mask) const;
};

// A would-be isotropic vector: one polynomial per subset, in t_1..t_n.
struct IsotropyCandidate {
    std::uint32_t n = 0;
    std::vector<MultiPoly> f;  // size 2^n, subset-mask indexed

    bool all_zero() const;
};

// sum_I t_I f_I^2, exactly.
MultiPoly pfister_evaluate(const PfisterForm& form, const IsotropyCandidate& cand);

// One level of the nonvanishing descent.  At level n the candidate has 2^n
// entries; the low half collects the subsets without t_n, the high half the
// subsets containing it.
struct DescentNode {
    enum class Case { Base, LowNonzero, HighNonzero };

    std::uint32_t level = 0;
    std::vector<MultiPoly> candidate;
    MultiPoly content;               // common factor stripped at this level
    std::vector<MultiPoly> stripped;  // candidate / content
    Case kind = Case::Base;
    std::vector<MultiPoly> child_candidate;  // reductions at t_level = 0
    std::unique_ptr<DescentNode> child;
};

struct DescentCertificate {
    PfisterForm form;
    IsotropyCandidate candidate;
    MultiPoly value;  // pfister_evaluate(form, candidate), recorded for reference
    std::unique_ptr<DescentNode> root;
};

// Replays the induction of the anisotropy proof on a concrete candidate,
// emitting the divisibility/reduction chain that forces
// pfister_evaluate(form, cand) != 0.  Throws CertificateFailure when cand is
// the zero vector.
DescentCertificate descent_certificate(const PfisterForm& form, const IsotropyCandidate& cand);

// Re-executes every step of a descent certificate.  Returns the path of the
// first failing check, or an empty string on success.
std::string verify_descent(const DescentCertificate& cert);

// Diagonal form whose coefficients are distinct squarefree monomials in
// independent variables; the shape every pairing form reduces to.
struct MonomialDiagonalForm {
    std::vector<Monomial> coefficients;
};

struct MonomialNode {
    std::vector<Monomial> monomials;
    bool base = true;
    Var split_var = 0;
    std::vector<std::size_t> low;   // indices not divisible by split_var
    std::vector<std::size_t> high;  // indices divisible by split_var
    std::unique_ptr<MonomialNode> low_child;
    std::unique_ptr<MonomialNode> high_child;
};

struct MonomialCertificate {
    std::unique_ptr<MonomialNode> root;
};

// Variable-by-variable descent certificate that the form is anisotropic over
// the rational function field.  Throws DuplicateClass if two coefficients
// coincide, CertificateFailure if one is not squarefree.
MonomialCertificate monomial_form_anisotropy(const MonomialDiagonalForm& form);

// Re-executes a monomial certificate.  Returns the path of the first failing
// check, or an empty string on success.
std::string verify_monomial(const MonomialCertificate& cert,
                            const std::vector<Monomial>& expected_root);

}  // namespace stabcsa
