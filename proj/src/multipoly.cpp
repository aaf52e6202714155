#include "stabcsa/multipoly.hpp"

#include <algorithm>

#include "stabcsa/errors.hpp"

namespace stabcsa {

std::uint64_t mono_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            ++i;
        } else if (b[j].first < a[i].first) {
            ++j;
        } else {
            out.emplace_back(a[i].first, std::min(a[i].second, b[j].second));
            ++i;
            ++j;
        }
    }
    return out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    std::size_t j = 0;
    for (const auto& [v, e] : a) {
        while (j < b.size() && b[j].first < v) ++j;
        if (j == b.size() || b[j].first != v || b[j].second < e) return false;
    }
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial out;
    std::size_t i = 0;
    for (const auto& [v, e] : b) {
        std::uint32_t sub = 0;
        while (i < a.size() && a[i].first < v) ++i;
        if (i < a.size() && a[i].first == v) sub = a[i].second;
        if (sub > e) throw DivisionByZero("monomial division is not exact");
        if (e > sub) out.emplace_back(v, e - sub);
    }
    return out;
}

std::string mono_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) s += "*";
        s += var_name(m[k].first);
        if (m[k].second > 1) s += "^" + std::to_string(m[k].second);
    }
    return s;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    // Lex tie-break: first variable (in the fixed order) with differing
    // exponent; the higher exponent wins.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) return false;  // a has the smaller var -> a greater
        if (b[j].first < a[i].first) return true;
        if (a[i].second != b[j].second) return a[i].second < b[j].second;
        ++i;
        ++j;
    }
    if (i < a.size()) return false;
    if (j < b.size()) return true;
    return false;
}

MultiPoly MultiPoly::variable(Var v, std::uint32_t exp) {
    MultiPoly p;
    if (exp == 0) return MultiPoly(1);
    p.terms_[Monomial{{v, exp}}] = Gaussian(1);
    return p;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Gaussian& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

Gaussian MultiPoly::constant_value() const {
    if (terms_.empty()) return Gaussian(0);
    if (!is_constant()) throw InputError("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

std::uint64_t MultiPoly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
}

std::uint32_t MultiPoly::degree_in(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) {
        for (const auto& [mv, e] : m)
            if (mv == v) d = std::max(d, e);
    }
    return d;
}

std::set<Var> MultiPoly::variables() const {
    std::set<Var> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) out.insert(v);
    return out;
}

bool MultiPoly::contains_var(Var v) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [mv, e] : m)
            if (mv == v) return true;
    return false;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw InputError("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Gaussian& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw InputError("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Gaussian& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

MultiPoly MultiPoly::scaled(const Gaussian& c) const {
    MultiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Gaussian& c) const {
    MultiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [mm, k] : terms_) out.terms_[mono_mul(mm, m)] = k * c;
    return out;
}

MultiPoly MultiPoly::reduce_mod_var(Var v) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        bool has = false;
        for (const auto& [mv, e] : m)
            if (mv == v) { has = true; break; }
        if (!has) out.terms_[m] = c;
    }
    return out;
}

bool MultiPoly::divisible_by_var(Var v) const {
    for (const auto& [m, c] : terms_) {
        bool has = false;
        for (const auto& [mv, e] : m)
            if (mv == v) { has = true; break; }
        if (!has) return false;
    }
    return true;
}

MultiPoly MultiPoly::divide_by_var(Var v) const {
    MultiPoly out;
    Monomial mv{{v, 1}};
    for (const auto& [m, c] : terms_) out.terms_[mono_div(m, mv)] = c;
    return out;
}

bool MultiPoly::try_divide(const MultiPoly& divisor, MultiPoly& quotient) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    MultiPoly q;
    MultiPoly r = *this;
    const Monomial& dlm = divisor.leading_monomial();
    const Gaussian& dlc = divisor.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& rlm = r.leading_monomial();
        if (!mono_divides(dlm, rlm)) return false;
        Monomial qm = mono_div(rlm, dlm);
        Gaussian qc = r.leading_coefficient() / dlc;
        q.add_term(qm, qc);
        r -= divisor.mul_monomial(qm, qc);
    }
    quotient = std::move(q);
    return true;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    MultiPoly q;
    if (!try_divide(divisor, q)) throw DivisionByZero("polynomial division is not exact");
    return q;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Gaussian& c = it->second;
        std::string piece;
        if (m.empty()) {
            piece = c.str();
        } else if (c.is_one()) {
            piece = mono_str(m);
        } else if (c == Gaussian(-1)) {
            piece = "-" + mono_str(m);
        } else {
            std::string cs = c.str();
            bool needs_paren = cs.find('+') != std::string::npos ||
                               cs.find('-', 1) != std::string::npos;
            if (needs_paren) cs = "(" + cs + ")";
            piece = cs + "*" + mono_str(m);
        }
        if (first) {
            out = piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

MultiPoly operator*(const Gaussian& c, const MultiPoly& p) { return p.scaled(c); }

namespace {

MultiPoly monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_coefficient().inverse());
}

Monomial monomial_content(const MultiPoly& p) {
    Monomial g;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            g = m;
            first = false;
        } else {
            g = mono_gcd(g, m);
        }
        if (g.empty()) break;
    }
    return g;
}

// Coefficients of p viewed as a univariate polynomial in v.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, Var v) {
    std::vector<MultiPoly> out(p.degree_in(v) + 1);
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = 0;
        Monomial rest;
        for (const auto& [mv, me] : m) {
            if (mv == v)
                e = me;
            else
                rest.emplace_back(mv, me);
        }
        out[e].add_term(rest, c);
    }
    return out;
}

MultiPoly content_in(const MultiPoly& p, Var v) {
    auto cs = coeffs_in(p, v);
    std::vector<MultiPoly> nz;
    for (auto& c : cs)
        if (!c.is_zero()) nz.push_back(std::move(c));
    return poly_gcd(nz);
}

// Pseudo-remainder of a by b in the variable v (up to a power of lc(b),
// which the primitive PRS discards anyway).
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, Var v) {
    auto bc = coeffs_in(b, v);
    std::uint32_t db = static_cast<std::uint32_t>(bc.size()) - 1;
    const MultiPoly& lb = bc[db];
    MultiPoly r = a;
    while (!r.is_zero()) {
        std::uint32_t dr = r.degree_in(v);
        if (dr < db) break;
        auto rc = coeffs_in(r, v);
        MultiPoly lr = rc[dr];
        if (lr.is_zero()) break;  // cannot happen; defensive against stale degree
        MultiPoly shift = MultiPoly::variable(v, dr - db);
        if (dr == db) shift = MultiPoly(1);
        r = r * lb - b * lr * shift;
    }
    return r;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return MultiPoly(1);
    if (a.is_monomial() || b.is_monomial()) {
        Monomial ga = a.is_monomial() ? a.leading_monomial() : monomial_content(a);
        Monomial gb = b.is_monomial() ? b.leading_monomial() : monomial_content(b);
        return MultiPoly::monomial(mono_gcd(ga, gb), Gaussian(1));
    }

    Var v = std::max(*a.variables().rbegin(), *b.variables().rbegin());
    std::uint32_t da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0 || db == 0) {
        // v occurs in only one argument; the gcd must divide that one's
        // v-content, so recurse on contents.
        MultiPoly ca = da == 0 ? a : content_in(a, v);
        MultiPoly cb = db == 0 ? b : content_in(b, v);
        return poly_gcd(ca, cb);
    }

    MultiPoly ca = content_in(a, v);
    MultiPoly cb = content_in(b, v);
    MultiPoly A = a.divide_exact(ca);
    MultiPoly B = b.divide_exact(cb);
    MultiPoly cg = poly_gcd(ca, cb);

    // Primitive polynomial remainder sequence in v.
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    while (true) {
        MultiPoly r = pseudo_rem(A, B, v);
        if (r.is_zero()) return monic(cg * B);
        if (r.degree_in(v) == 0) return monic(cg);
        A = B;
        B = r.divide_exact(content_in(r, v));
    }
}

MultiPoly poly_gcd(const std::vector<MultiPoly>& ps) {
    MultiPoly g;
    for (const auto& p : ps) {
        g = poly_gcd(g, p);
        if (g.is_one()) return g;
    }
    return g;
}

}  // namespace stabcsa
