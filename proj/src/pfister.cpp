#include "stabcsa/pfister.hpp"

#include <algorithm>

#include "stabcsa/errors.hpp"

namespace stabcsa {

Monomial PfisterForm::coefficient(std::uint32_t mask) const {
    Monomial m;
    for (std::uint32_t k = 1; k <= n; ++k)
        if (mask & (1u << (k - 1))) m.emplace_back(var_t(k), 1);
    return m;
}

bool IsotropyCandidate::all_zero() const {
    for (const auto& p : f)
        if (!p.is_zero()) return false;
    return true;
}

MultiPoly pfister_evaluate(const PfisterForm& form, const IsotropyCandidate& cand) {
    if (cand.n != form.n || cand.f.size() != form.size())
        throw DimensionMismatch("candidate size does not match the form");
    MultiPoly acc;
    for (std::uint32_t mask = 0; mask < form.size(); ++mask) {
        if (cand.f[mask].is_zero()) continue;
        MultiPoly sq = cand.f[mask] * cand.f[mask];
        acc += sq.mul_monomial(form.coefficient(mask), Gaussian(1));
    }
    return acc;
}

namespace {

std::unique_ptr<DescentNode> descend(std::uint32_t level, std::vector<MultiPoly> cand) {
    auto node = std::make_unique<DescentNode>();
    node->level = level;
    node->candidate = cand;

    std::vector<MultiPoly> nonzero;
    for (const auto& p : cand)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.empty())
        throw CertificateFailure("candidate vector is zero after normalization");

    node->content = poly_gcd(nonzero);
    node->stripped.reserve(cand.size());
    for (const auto& p : cand)
        node->stripped.push_back(p.is_zero() ? MultiPoly() : p.divide_exact(node->content));

    if (level == 0) {
        node->kind = DescentNode::Case::Base;
        return node;
    }

    const Var tn = var_t(level);
    const std::size_t half = std::size_t{1} << (level - 1);

    std::vector<MultiPoly> low_red, high_red;
    bool low_nonzero = false, high_nonzero = false;
    for (std::size_t k = 0; k < half; ++k) {
        low_red.push_back(node->stripped[k].reduce_mod_var(tn));
        if (!low_red.back().is_zero()) low_nonzero = true;
        high_red.push_back(node->stripped[half + k].reduce_mod_var(tn));
        if (!high_red.back().is_zero()) high_nonzero = true;
    }

    if (low_nonzero) {
        node->kind = DescentNode::Case::LowNonzero;
        node->child_candidate = std::move(low_red);
    } else if (high_nonzero) {
        // t_level divides the whole low half; dividing the relation by
        // t_level and reducing again shifts the descent to the high half.
        node->kind = DescentNode::Case::HighNonzero;
        node->child_candidate = std::move(high_red);
    } else {
        // Cannot happen: the stripped candidate has no common factor.
        throw CertificateFailure("both halves vanished after stripping common factors");
    }
    node->child = descend(level - 1, node->child_candidate);
    return node;
}

std::string verify_node(const DescentNode& node, std::uint32_t level,
                        const std::vector<MultiPoly>& expected, const std::string& path) {
    if (node.level != level) return path + ": level mismatch";
    if (node.candidate != expected) return path + ": candidate differs from parent hand-off";
    if (node.candidate.size() != (std::size_t{1} << level))
        return path + ": candidate has the wrong arity";

    bool any = false;
    for (const auto& p : node.candidate)
        if (!p.is_zero()) any = true;
    if (!any) return path + ": candidate is identically zero";

    if (node.content.is_zero()) return path + ": zero content";
    if (node.stripped.size() != node.candidate.size())
        return path + ": stripped vector has the wrong arity";
    for (std::size_t k = 0; k < node.candidate.size(); ++k) {
        if (node.stripped[k] * node.content != node.candidate[k])
            return path + ": content division fails at entry " + std::to_string(k);
    }

    if (level == 0) {
        if (node.kind != DescentNode::Case::Base) return path + ": level 0 must be a base case";
        if (node.stripped[0].is_zero()) return path + ": base entry is zero";
        return "";
    }
    if (node.kind == DescentNode::Case::Base) return path + ": base case above level 0";
    if (!node.child) return path + ": missing child";

    const Var tn = var_t(level);
    const std::size_t half = std::size_t{1} << (level - 1);
    if (node.child_candidate.size() != half) return path + ": child hand-off has wrong arity";

    if (node.kind == DescentNode::Case::LowNonzero) {
        for (std::size_t k = 0; k < half; ++k)
            if (node.child_candidate[k] != node.stripped[k].reduce_mod_var(tn))
                return path + ": low reduction differs at entry " + std::to_string(k);
    } else {
        for (std::size_t k = 0; k < half; ++k) {
            if (!node.stripped[k].divisible_by_var(tn))
                return path + ": claimed divisibility fails at entry " + std::to_string(k);
            if (node.child_candidate[k] != node.stripped[half + k].reduce_mod_var(tn))
                return path + ": high reduction differs at entry " + std::to_string(k);
        }
    }
    return verify_node(*node.child, level - 1, node.child_candidate,
                       path + "/" + std::to_string(level - 1));
}

}  // namespace

DescentCertificate descent_certificate(const PfisterForm& form, const IsotropyCandidate& cand) {
    if (cand.n != form.n || cand.f.size() != form.size())
        throw DimensionMismatch("candidate size does not match the form");
    if (cand.all_zero()) throw CertificateFailure("candidate vector is zero");
    DescentCertificate cert;
    cert.form = form;
    cert.candidate = cand;
    cert.value = pfister_evaluate(form, cand);
    cert.root = descend(form.n, cand.f);
    return cert;
}

std::string verify_descent(const DescentCertificate& cert) {
    if (!cert.root) return "root: missing";
    if (cert.value != pfister_evaluate(cert.form, cert.candidate))
        return "root: recorded value differs from re-evaluation";
    std::string r = verify_node(*cert.root, cert.form.n, cert.candidate.f,
                                std::to_string(cert.form.n));
    if (!r.empty()) return r;
    if (cert.value.is_zero()) return "root: certified value is zero";
    return "";
}

namespace {

bool squarefree(const Monomial& m) {
    for (const auto& [v, e] : m)
        if (e != 1) return false;
    return true;
}

Var max_var(const std::vector<Monomial>& ms) {
    Var best = 0;
    for (const auto& m : ms)
        for (const auto& [v, e] : m) best = std::max(best, v);
    return best;
}

bool divisible(const Monomial& m, Var v) {
    for (const auto& [mv, e] : m)
        if (mv == v) return true;
    return false;
}

Monomial remove_var(const Monomial& m, Var v) {
    Monomial out;
    for (const auto& [mv, e] : m)
        if (mv != v) out.emplace_back(mv, e);
    return out;
}

void check_distinct_squarefree(const std::vector<Monomial>& ms) {
    for (std::size_t a = 0; a < ms.size(); ++a) {
        if (!squarefree(ms[a]))
            throw CertificateFailure("coefficient " + mono_str(ms[a]) + " is not squarefree");
        for (std::size_t b = a + 1; b < ms.size(); ++b)
            if (ms[a] == ms[b])
                throw DuplicateClass("duplicate class " + mono_str(ms[a]) + " at positions " +
                                     std::to_string(a) + " and " + std::to_string(b));
    }
}

std::unique_ptr<MonomialNode> monomial_descend(std::vector<Monomial> ms) {
    check_distinct_squarefree(ms);
    auto node = std::make_unique<MonomialNode>();
    node->monomials = ms;
    if (ms.size() <= 1) return node;

    Var v = max_var(ms);
    // >= 2 distinct squarefree monomials always involve a variable.
    node->base = false;
    node->split_var = v;
    std::vector<Monomial> low_ms, high_ms;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        if (divisible(ms[k], v)) {
            node->high.push_back(k);
            high_ms.push_back(remove_var(ms[k], v));
        } else {
            node->low.push_back(k);
            low_ms.push_back(ms[k]);
        }
    }
    if (!low_ms.empty()) node->low_child = monomial_descend(std::move(low_ms));
    if (!high_ms.empty()) node->high_child = monomial_descend(std::move(high_ms));
    return node;
}

std::string verify_monomial_node(const MonomialNode& node, const std::vector<Monomial>& expected,
                                 const std::string& path) {
    if (node.monomials != expected) return path + ": monomials differ from parent hand-off";
    try {
        check_distinct_squarefree(node.monomials);
    } catch (const std::exception& e) {
        return path + ": " + e.what();
    }
    if (node.base) {
        if (node.monomials.size() > 1) return path + ": base node with more than one class";
        return "";
    }
    if (node.split_var == 0) return path + ": missing split variable";
    std::vector<Monomial> low_ms, high_ms;
    std::vector<std::size_t> seen;
    for (std::size_t k : node.low) {
        if (k >= node.monomials.size() || divisible(node.monomials[k], node.split_var))
            return path + ": bad low index " + std::to_string(k);
        low_ms.push_back(node.monomials[k]);
        seen.push_back(k);
    }
    for (std::size_t k : node.high) {
        if (k >= node.monomials.size() || !divisible(node.monomials[k], node.split_var))
            return path + ": bad high index " + std::to_string(k);
        high_ms.push_back(remove_var(node.monomials[k], node.split_var));
        seen.push_back(k);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t k = 0; k < node.monomials.size(); ++k)
        if (k >= seen.size() || seen[k] != k) return path + ": split does not cover all classes";

    if (!low_ms.empty()) {
        if (!node.low_child) return path + ": missing low child";
        std::string r = verify_monomial_node(*node.low_child, low_ms, path + "/low");
        if (!r.empty()) return r;
    } else if (node.low_child) {
        return path + ": unexpected low child";
    }
    if (!high_ms.empty()) {
        if (!node.high_child) return path + ": missing high child";
        std::string r = verify_monomial_node(*node.high_child, high_ms, path + "/high");
        if (!r.empty()) return r;
    } else if (node.high_child) {
        return path + ": unexpected high child";
    }
    return "";
}

}  // namespace

MonomialCertificate monomial_form_anisotropy(const MonomialDiagonalForm& form) {
    MonomialCertificate cert;
    cert.root = monomial_descend(form.coefficients);
    return cert;
}

std::string verify_monomial(const MonomialCertificate& cert,
                            const std::vector<Monomial>& expected_root) {
    if (!cert.root) return "root: missing";
    return verify_monomial_node(*cert.root, expected_root, "root");
}

}  // namespace stabcsa
