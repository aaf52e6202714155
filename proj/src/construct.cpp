#include "stabcsa/construct.hpp"

#include "stabcsa/errors.hpp"

namespace stabcsa {

std::string group_name(Group g) { return g == Group::Sp ? "sp" : "so"; }

std::string case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::SpOdd: return "sp-odd";
        case CaseTag::SpEven: return "sp-even";
        case CaseTag::SoOdd: return "so-odd";
        case CaseTag::SoEven: return "so-even";
        case CaseTag::SoPow2: return "so-pow2";
        case CaseTag::Foreign: return "foreign";
    }
    throw InputError("unknown case tag");
}

AuxMatrices aux_matrices(std::size_t s) {
    if (s == 0) throw InvalidCase("matrix factor size must be positive");
    SqMatrix m1(s), m2(s);
    m1.at(0, 0) = TowerElement(1);
    for (std::size_t k = 1; k < s; ++k) {
        m1.at(0, k) = TowerElement(1);
        m1.at(k, 0) = TowerElement(1);
        m2.at(0, k) = TowerElement(1);
        m2.at(k, 0) = TowerElement(-1);
    }
    return AuxMatrices{m1, m2};
}

namespace {

SqMatrix diag_one_to(std::size_t s) {
    std::vector<TowerElement> d;
    d.reserve(s);
    for (std::size_t m = 1; m <= s; ++m) d.emplace_back(static_cast<long>(m));
    return SqMatrix::diag(d);
}

SqMatrix kron_chain(const std::vector<SqMatrix>& factors) {
    SqMatrix acc = factors.at(0);
    for (std::size_t k = 1; k < factors.size(); ++k) acc = kron(acc, factors[k]);
    return acc;
}

GramMatrix kron_chain(const std::vector<GramMatrix>& factors) {
    GramMatrix acc = factors.at(0);
    for (std::size_t k = 1; k < factors.size(); ++k) acc = kron(acc, factors[k]);
    return acc;
}

// The standard A and the orthogonal/symplectic B over alpha quaternion slots
// and an s-dimensional matrix slot.
SqMatrix standard_first(std::uint32_t alpha, std::uint32_t s) {
    std::vector<SqMatrix> f;
    for (std::uint32_t l = 1; l <= alpha; ++l) f.push_back(quaternion_split(l).Mi);
    f.push_back(diag_one_to(s));
    return kron_chain(f);
}

StableTupleCandidate assemble(const ConstructionParams& p, CaseTag tag, GramMatrix gram,
                              SqMatrix a, SqMatrix b, std::uint32_t alpha_eff,
                              std::uint32_t s_eff, bool standard) {
    StableTupleCandidate t{a.dim(),
                           std::move(gram),
                           InvolutionKind::Orthogonal,
                           {},
                           tag,
                           p,
                           alpha_eff,
                           s_eff,
                           standard};
    t.kind = classify_involution(t.gram);
    t.elements.push_back(std::move(a));
    for (std::uint32_t k = 1; k < p.g; ++k) t.elements.push_back(b);
    return t;
}

// The orthogonal construction over alpha_q quaternion slots and matrix slot
// size s; used both for the s != 1 cases and, with s = 2, for the variant
// where the last quaternion factor is replaced by a split 2x2 matrix algebra.
StableTupleCandidate build_orthogonal(const ConstructionParams& p, CaseTag tag,
                                      std::uint32_t alpha_q, std::uint32_t s) {
    AuxMatrices aux = aux_matrices(s);
    SqMatrix a = standard_first(alpha_q, s);

    std::vector<SqMatrix> ichain, jchain;
    for (std::uint32_t l = 1; l <= alpha_q; ++l) {
        ichain.push_back(quaternion_split(l).Mi);
        jchain.push_back(quaternion_split(l).Mj);
    }

    std::vector<SqMatrix> bi = ichain;
    bi.push_back(aux.M1);

    std::vector<GramMatrix> gfac;
    SqMatrix b2(0);
    if (alpha_q % 2 == 1) {
        std::vector<SqMatrix> bj = jchain;
        bj.push_back(aux.M2);
        b2 = kron_chain(bj);
        for (std::uint32_t l = 0; l < alpha_q; ++l) gfac.push_back(gram_delta());
        gfac.push_back(gram_identity(s));
    } else {
        std::vector<SqMatrix> bj(jchain.begin(), jchain.end() - 1);
        bj.push_back(SqMatrix::identity(2));
        bj.push_back(aux.M2);
        b2 = kron_chain(bj);
        for (std::uint32_t l = 0; l + 1 < alpha_q; ++l) gfac.push_back(gram_delta());
        gfac.push_back(gram_identity(2));
        gfac.push_back(gram_identity(s));
    }
    SqMatrix b = kron_chain(bi) + b2;
    return assemble(p, tag, kron_chain(gfac), std::move(a), std::move(b), alpha_q, s, true);
}

}  // namespace

StableTupleCandidate build_tuple(const ConstructionParams& p) {
    if (p.g < 2) throw InvalidCase("g must be at least 2");
    if (p.s % 2 == 0) throw InvalidCase("s must be odd");
    if (p.alpha == 0)
        throw InvalidCase("alpha must be at least 1 (epsilon would be odd)");

    if (p.group == Group::Sp) {
        SqMatrix a = standard_first(p.alpha, p.s);
        std::vector<SqMatrix> bfac;
        std::vector<GramMatrix> gfac;
        CaseTag tag;
        if (p.alpha % 2 == 1) {
            tag = CaseTag::SpOdd;
            for (std::uint32_t l = 1; l <= p.alpha; ++l) {
                bfac.push_back(quaternion_split(l).Mj);
                gfac.push_back(gram_sigma_inv());
            }
        } else {
            tag = CaseTag::SpEven;
            for (std::uint32_t l = 1; l < p.alpha; ++l) {
                bfac.push_back(quaternion_split(l).Mj);
                gfac.push_back(gram_sigma_inv());
            }
            bfac.push_back(SqMatrix::identity(2));
            gfac.push_back(gram_t_inv(p.alpha));
        }
        bfac.push_back(SqMatrix::identity(p.s));
        gfac.push_back(gram_identity(p.s));
        return assemble(p, tag, kron_chain(gfac), std::move(a), kron_chain(bfac), p.alpha,
                        p.s, true);
    }

    // SO cases.
    if (p.s != 1) return build_orthogonal(p, p.alpha % 2 == 1 ? CaseTag::SoOdd : CaseTag::SoEven,
                                          p.alpha, p.s);

    // s = 1: the last quaternion factor degenerates to a split 2x2 matrix
    // algebra carrying the transpose involution, leaving alpha-1 quaternion
    // slots and a 2-dimensional matrix slot.
    std::uint32_t alpha_q = p.alpha - 1;
    if (alpha_q == 0) {
        // Plain 2x2 matrix algebra with transpose; the only skew elements are
        // the multiples of [[0,1],[-1,0]].
        SqMatrix sigma(2);
        sigma.at(0, 1) = TowerElement(1);
        sigma.at(1, 0) = TowerElement(-1);
        return assemble(p, CaseTag::SoPow2, gram_identity(2), sigma, sigma, 0, 2, false);
    }
    return build_orthogonal(p, CaseTag::SoPow2, alpha_q, 2);
}

StableTupleCandidate make_tuple(GramMatrix gram, std::vector<SqMatrix> elements) {
    if (elements.size() < 2) throw InvalidCase("a tuple needs at least two elements");
    for (const auto& m : elements)
        if (m.dim() != gram.dim())
            throw DimensionMismatch("tuple element dimension does not match the form");
    StableTupleCandidate t{gram.dim(),
                           std::move(gram),
                           InvolutionKind::Orthogonal,
                           std::move(elements),
                           CaseTag::Foreign,
                           ConstructionParams{},
                           0,
                           1,
                           false};
    t.kind = classify_involution(t.gram);
    t.params.g = static_cast<std::uint32_t>(t.elements.size());
    return t;
}

std::optional<std::size_t> verify_skew(const StableTupleCandidate& t) {
    InvolutionSpec inv(t.gram);
    for (std::size_t k = 0; k < t.elements.size(); ++k) {
        if (inv.apply(t.elements[k]) != -t.elements[k]) return k + 1;
    }
    return std::nullopt;
}

}  // namespace stabcsa
