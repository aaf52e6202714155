#include "stabcsa/pairing.hpp"

#include <map>

#include "stabcsa/errors.hpp"

namespace stabcsa {

std::string pairing_kind_name(PairingKind k) {
    return k == PairingKind::VWithBv ? "Q(v,Bv)" : "Q(Bv,Bv)";
}

namespace {

bool is_lambda_free(const MultiPoly& p) {
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m)
            if (var_kind(v) == VarKind::Lambda) return false;
    return true;
}

// Splits a monomial into its lambda part and the rest.
void split_lambda(const Monomial& m, Monomial& lambda_part, Monomial& rest) {
    for (const auto& [v, e] : m) {
        if (var_kind(v) == VarKind::Lambda)
            lambda_part.emplace_back(v, e);
        else
            rest.emplace_back(v, e);
    }
}

}  // namespace

DiagonalQuadraticForm pairing_quadratic_form(const StableTupleCandidate& t,
                                             const EigenPair& pair) {
    const std::size_t n = t.epsilon;

    DiagonalQuadraticForm form;
    form.pairing = t.kind == InvolutionKind::Symplectic ? PairingKind::VWithBv
                                                        : PairingKind::BvWithBv;
    form.eigenvalue = pair.eigenvalue;

    // Generic eigenvector with one fresh symbol per eigenspace basis vector.
    std::map<Var, std::size_t> label_of_var;
    std::vector<TowerElement> v(n);
    for (std::size_t k = 0; k < pair.basis.size(); ++k) {
        std::size_t idx = pair.basis[k].global_index;
        Var lv = var_lambda(static_cast<std::uint32_t>(idx) + 1);
        label_of_var[lv] = k;
        form.labels.push_back(idx);
        v[idx] = TowerElement::variable(lv);
    }

    std::vector<TowerElement> bv = t.second().apply(v);
    TowerElement value = form.pairing == PairingKind::VWithBv
                             ? bilinear(t.gram, v, bv)
                             : bilinear(t.gram, bv, bv);

    // Collect lambda_I^2 coefficients slot by slot; any surviving mixed term
    // makes the form non-diagonal.
    std::vector<TowerElement> coeffs(pair.basis.size());
    for (const auto& [mask, rf] : value.slots()) {
        if (!is_lambda_free(rf.den()))
            throw CrossTermsPresent("pairing denominator involves a fresh symbol");
        std::map<Var, MultiPoly> diag_parts;
        MultiPoly slot_cross;
        for (const auto& [mono, c] : rf.num().terms()) {
            Monomial lambda_part, rest;
            split_lambda(mono, lambda_part, rest);
            if (lambda_part.size() == 1 && lambda_part[0].second == 2) {
                diag_parts[lambda_part[0].first].add_term(rest, c);
            } else {
                slot_cross.add_term(mono, c);
            }
        }
        if (!slot_cross.is_zero())
            throw CrossTermsPresent("pairing has cross terms: " + slot_cross.str());
        for (const auto& [lv, numpart] : diag_parts) {
            TowerElement piece;
            piece.set_slot(mask, RatFunc(numpart, rf.den()));
            coeffs[label_of_var.at(lv)] += piece;
        }
    }

    form.coefficients = std::move(coeffs);
    return form;
}

}  // namespace stabcsa
