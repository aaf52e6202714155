#include "stabcsa/eigen.hpp"

#include "stabcsa/errors.hpp"

namespace stabcsa {

namespace {

// sign * m * sqrt(x_1 ... x_alpha)
TowerElement expected_eigenvalue(bool negative, std::size_t m, std::uint32_t alpha) {
    std::uint32_t mask = alpha == 0 ? 0 : ((1u << alpha) - 1);
    TowerElement e;
    e.set_slot(mask, RatFunc(static_cast<long>(m) * (negative ? -1 : 1)));
    return e;
}

}  // namespace

EigenSystem eigen_system(const StableTupleCandidate& t) {
    const SqMatrix& a = t.first();
    if (!a.is_diagonal())
        throw NotDiagonalizable("first element is not diagonal on the Kronecker basis");

    const std::size_t n = a.dim();
    EigenSystem sys;
    const bool structured =
        t.standard_form && n == (std::size_t{1} << t.alpha_eff) * t.s_eff;

    for (std::size_t idx = 0; idx < n; ++idx) {
        EigenBasisVector v;
        v.global_index = idx;
        if (structured) {
            std::size_t rest = idx;
            v.m = rest % t.s_eff + 1;
            rest /= t.s_eff;
            v.parities.assign(t.alpha_eff, 0);
            for (std::uint32_t k = t.alpha_eff; k-- > 0;) {
                v.parities[k] = rest & 1u;
                rest >>= 1;
            }
            // Complementing every parity bit gives the flipped basis vector.
            std::size_t flip = idx % t.s_eff;
            std::size_t stride = t.s_eff;
            for (std::uint32_t k = t.alpha_eff; k-- > 0;) {
                std::size_t bit = v.parities[k] ^ 1u;
                flip += bit * stride;
                stride <<= 1;
            }
            v.flip_index = flip;

            // The eigenvalue forced by the construction; cross-checked here.
            std::size_t even_count = 0;
            for (auto b : v.parities) even_count += b;
            TowerElement expect =
                expected_eigenvalue(even_count % 2 == 1, v.m, t.alpha_eff);
            if (a.at(idx, idx) != expect)
                throw NotDiagonalizable("diagonal entry disagrees with the Kronecker shape");
        } else {
            v.m = idx + 1;
            v.flip_index = idx;
        }

        const TowerElement& ev = a.at(idx, idx);
        bool placed = false;
        for (auto& pair : sys.pairs) {
            if (pair.eigenvalue == ev) {
                pair.basis.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) sys.pairs.push_back(EigenPair{ev, {v}});
    }

    if (structured) {
        std::size_t expected_mult = t.alpha_eff == 0 ? 1 : (std::size_t{1} << (t.alpha_eff - 1));
        for (const auto& pair : sys.pairs)
            if (pair.basis.size() != expected_mult)
                throw NotDiagonalizable("eigenvalue multiplicity disagrees with 2^(alpha-1)");
    }
    return sys;
}

}  // namespace stabcsa
