#pragma once

#include <optional>

#include "stabcsa/pairing.hpp"
#include "stabcsa/pfister.hpp"
#include "stabcsa/specialize.hpp"

namespace stabcsa {

// Square-class normal form of a coefficient ratio: unit * squarefree
// monomial, with the roots sqrt(x_l) treated as independent variables.
struct SquareClass {
    Gaussian unit;     // square in Q(i) whenever certification succeeded
    Monomial monomial;
};

struct AnisotropyCertificate {
    TowerElement eigenvalue;
    PairingKind pairing = PairingKind::VWithBv;
    std::vector<std::size_t> labels;
    std::vector<TowerElement> coefficients;
    TowerElement common_factor;  // the first coefficient; ratios are taken against it
    std::vector<SquareClass> classes;
    MonomialCertificate monomial_cert;
};

// Certifies that the diagonal form is anisotropic over K: factors out the
// first coefficient, absorbs squares (including -1 and even square-root
// content), and requires the residual classes to be distinct squarefree
// monomials; anisotropy then follows from the monomial-form descent.
// Throws CertificateFailure (zero/non-monomial coefficient, non-square unit
// ratio) or DuplicateClass naming the offending pair.
AnisotropyCertificate certify_anisotropic(const DiagonalQuadraticForm& form);

// Normal form of a single nonzero monomial-shaped tower element.
// Throws CertificateFailure when the element is not unit * monomial.
SquareClass square_class(const TowerElement& e);

// True iff the form vanishes on the span; throws InputError on a dependent
// basis.
bool is_isotropic_subspace(const GramMatrix& gram,
                           const std::vector<std::vector<TowerElement>>& basis);

enum class StabilityVerdict { Stable, Inconclusive, UnstableWitness };

std::string verdict_name(StabilityVerdict v);

struct SpecTrialLog {
    std::size_t trial = 0;
    SpecializationMap map;
    bool exhaustive = false;       // every candidate eigenline was enumerated
    std::size_t lines_searched = 0;
    // Witness basis mod p, when an invariant totally isotropic submodule was
    // found at this specialization.
    std::optional<std::vector<std::vector<std::uint64_t>>> witness;
};

struct StabilityCertificate {
    enum class Mode { Symbolic, Specialized };
    Mode mode = Mode::Specialized;
    StabilityVerdict verdict = StabilityVerdict::Inconclusive;

    // Symbolic mode: one anisotropy certificate per eigenvalue.
    std::vector<AnisotropyCertificate> eigen_certs;

    // Specialized mode.
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<SpecTrialLog> log;
    std::optional<std::vector<std::vector<TowerElement>>> exact_witness;
};

// Symbolic certification: every eigenvalue's pairing form must certify
// anisotropic.  Throws on the first failing eigenvalue.
StabilityCertificate certify_symbolic(const StableTupleCandidate& t);

// Sound finite-field oracle.  Per trial: sample a specialization, reduce the
// tuple mod p, and search for a common invariant totally isotropic submodule
// by spinning seed vectors and, when the reduced first element is split
// semisimple with small eigenspaces, by exhausting every candidate eigenline.
// No submodule at one good specialization certifies Stable; witnesses at
// every trial yield Inconclusive.  With exact_input set, a witness found
// symbolically over K yields UnstableWitness.
StabilityCertificate specialized_stability(const StableTupleCandidate& t, std::size_t trials,
                                           std::uint64_t seed, std::uint64_t prime = 0,
                                           bool exact_input = false);

}  // namespace stabcsa
