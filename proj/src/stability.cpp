#include "stabcsa/stability.hpp"

#include <algorithm>
#include <map>

#include "stabcsa/errors.hpp"

namespace stabcsa {

std::string verdict_name(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::Stable: return "stable";
        case StabilityVerdict::Inconclusive: return "inconclusive";
        case StabilityVerdict::UnstableWitness: return "unstable-witness";
    }
    throw InputError("unknown verdict");
}

SquareClass square_class(const TowerElement& e) {
    if (e.is_zero()) throw CertificateFailure("square class of zero");
    if (e.slots().size() != 1)
        throw CertificateFailure("coefficient is not a monomial element: " + e.str());
    auto [mask, rf] = *e.slots().begin();
    if (!rf.num().is_monomial() || !rf.den().is_monomial())
        throw CertificateFailure("coefficient is not a monomial element: " + e.str());

    std::map<Var, long> exps;
    auto absorb = [&](const Monomial& m, long sign) {
        for (const auto& [v, ex] : m) {
            switch (var_kind(v)) {
                case VarKind::X:
                    // x_l = s_l^2 inside K
                    exps[var_s(var_index(v))] += sign * 2L * ex;
                    break;
                case VarKind::Y:
                case VarKind::T:
                    exps[v] += sign * static_cast<long>(ex);
                    break;
                default:
                    throw CertificateFailure("coefficient involves a non-field variable " +
                                             var_name(v));
            }
        }
    };
    absorb(rf.num().leading_monomial(), 1);
    absorb(rf.den().leading_monomial(), -1);
    for (std::uint32_t l = 1, m = mask; m; ++l, m >>= 1)
        if (m & 1u) exps[var_s(l)] += 1;

    SquareClass sc;
    sc.unit = rf.num().leading_coefficient() / rf.den().leading_coefficient();
    for (const auto& [v, ex] : exps) {
        long r = ((ex % 2) + 2) % 2;
        if (r) sc.monomial.emplace_back(v, 1);
    }
    return sc;
}

AnisotropyCertificate certify_anisotropic(const DiagonalQuadraticForm& form) {
    if (form.coefficients.empty())
        throw CertificateFailure("pairing form has no coefficients");
    for (std::size_t k = 0; k < form.coefficients.size(); ++k)
        if (form.coefficients[k].is_zero())
            throw CertificateFailure("zero coefficient at label " +
                                     std::to_string(form.labels[k]));

    AnisotropyCertificate cert;
    cert.eigenvalue = form.eigenvalue;
    cert.pairing = form.pairing;
    cert.labels = form.labels;
    cert.coefficients = form.coefficients;
    cert.common_factor = form.coefficients.front();

    TowerElement inv_common = cert.common_factor.inverse();
    for (const auto& c : form.coefficients) {
        SquareClass sc = square_class(c * inv_common);
        if (!is_square(sc.unit))
            throw CertificateFailure("unit ratio " + sc.unit.str() +
                                     " is not a square in Q(i)");
        cert.classes.push_back(std::move(sc));
    }

    for (std::size_t a = 0; a < cert.classes.size(); ++a)
        for (std::size_t b = a + 1; b < cert.classes.size(); ++b)
            if (cert.classes[a].monomial == cert.classes[b].monomial)
                throw DuplicateClass("coefficients at labels " + std::to_string(form.labels[a]) +
                                     " and " + std::to_string(form.labels[b]) +
                                     " share the square class " +
                                     mono_str(cert.classes[a].monomial));

    MonomialDiagonalForm mdf;
    for (const auto& sc : cert.classes) mdf.coefficients.push_back(sc.monomial);
    cert.monomial_cert = monomial_form_anisotropy(mdf);
    return cert;
}

StabilityCertificate certify_symbolic(const StableTupleCandidate& t) {
    StabilityCertificate cert;
    cert.mode = StabilityCertificate::Mode::Symbolic;
    EigenSystem sys = eigen_system(t);
    for (const auto& pair : sys.pairs) {
        DiagonalQuadraticForm form = pairing_quadratic_form(t, pair);
        cert.eigen_certs.push_back(certify_anisotropic(form));
    }
    cert.verdict = StabilityVerdict::Stable;
    return cert;
}

// ---------------------------------------------------------------------------
// Generic linear algebra over a field policy, used for the submodule search
// over F_p and, for exact witnesses, over K itself.

namespace {

struct FpOps {
    std::uint64_t p;
    using Elt = std::uint64_t;
    Elt zero() const { return 0; }
    bool is_zero(const Elt& a) const { return a == 0; }
    Elt add(const Elt& a, const Elt& b) const { return fp::add(a, b, p); }
    Elt sub(const Elt& a, const Elt& b) const { return fp::sub(a, b, p); }
    Elt mul(const Elt& a, const Elt& b) const { return fp::mul(a, b, p); }
    Elt div(const Elt& a, const Elt& b) const { return fp::mul(a, fp::inv(b, p), p); }
};

struct TowerOps {
    using Elt = TowerElement;
    Elt zero() const { return TowerElement(); }
    bool is_zero(const Elt& a) const { return a.is_zero(); }
    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt div(const Elt& a, const Elt& b) const { return a / b; }
};

template <class Ops>
struct LinAlg {
    using Elt = typename Ops::Elt;
    using Vec = std::vector<Elt>;
    using Mat = std::vector<Vec>;  // row major, square

    Ops ops;

    Vec apply(const Mat& m, const Vec& v) const {
        const std::size_t n = v.size();
        Vec out(n, ops.zero());
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (ops.is_zero(m[r][c]) || ops.is_zero(v[c])) continue;
                out[r] = ops.add(out[r], ops.mul(m[r][c], v[c]));
            }
        return out;
    }

    // Reduces v against an echelon basis (pivot columns normalized to 1).
    // Returns the remainder.
    Vec reduce(const std::vector<Vec>& basis, const std::vector<std::size_t>& pivots,
               Vec v) const {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Elt& c = v[pivots[k]];
            if (ops.is_zero(c)) continue;
            Elt f = c;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = ops.sub(v[j], ops.mul(f, basis[k][j]));
        }
        return v;
    }

    bool append(std::vector<Vec>& basis, std::vector<std::size_t>& pivots, Vec v) const {
        v = reduce(basis, pivots, std::move(v));
        std::size_t piv = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!ops.is_zero(v[j])) { piv = j; break; }
        if (piv == v.size()) return false;
        Elt inv = ops.div(v[piv], v[piv]);  // one
        inv = ops.div(inv, v[piv]);
        for (auto& e : v) e = ops.mul(e, inv);
        basis.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }

    // Smallest invariant subspace containing seed.
    std::vector<Vec> spin(const std::vector<Mat>& gens, const Vec& seed) const {
        std::vector<Vec> basis;
        std::vector<std::size_t> pivots;
        if (!append(basis, pivots, seed)) return basis;
        std::size_t next = 0;
        const std::size_t n = seed.size();
        while (next < basis.size() && basis.size() < n) {
            Vec v = basis[next++];
            for (const auto& g : gens) {
                if (append(basis, pivots, apply(g, v)) && basis.size() == n) break;
            }
        }
        return basis;
    }

    Elt pair(const Mat& gram, const Vec& u, const Vec& w) const {
        Elt acc = ops.zero();
        for (std::size_t r = 0; r < u.size(); ++r) {
            if (ops.is_zero(u[r])) continue;
            for (std::size_t c = 0; c < w.size(); ++c) {
                if (ops.is_zero(gram[r][c]) || ops.is_zero(w[c])) continue;
                acc = ops.add(acc, ops.mul(u[r], ops.mul(gram[r][c], w[c])));
            }
        }
        return acc;
    }

    bool totally_isotropic(const Mat& gram, const std::vector<Vec>& basis) const {
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (!ops.is_zero(pair(gram, basis[a], basis[b]))) return false;
        return true;
    }
};

}  // namespace

bool is_isotropic_subspace(const GramMatrix& gram,
                           const std::vector<std::vector<TowerElement>>& basis) {
    LinAlg<TowerOps> la;
    std::vector<std::vector<TowerElement>> ech;
    std::vector<std::size_t> pivots;
    for (const auto& v : basis) {
        if (v.size() != gram.dim())
            throw DimensionMismatch("subspace vector length does not match the form");
        if (!la.append(ech, pivots, v)) throw InputError("dependent basis");
    }
    LinAlg<TowerOps>::Mat g(gram.dim());
    for (std::size_t r = 0; r < gram.dim(); ++r) {
        g[r].resize(gram.dim());
        for (std::size_t c = 0; c < gram.dim(); ++c) g[r][c] = gram.matrix().at(r, c);
    }
    return la.totally_isotropic(g, basis);
}

// ---------------------------------------------------------------------------
// The specialization oracle.

namespace {

using FpLin = LinAlg<FpOps>;
using FpVec = FpLin::Vec;
using FpMat = FpLin::Mat;

FpMat specialize_matrix(const SqMatrix& m, const SpecializationMap& s) {
    FpMat out(m.dim(), FpVec(m.dim(), 0));
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c)
            if (!m.at(r, c).is_zero()) out[r][c] = specialize(m.at(r, c), s);
    return out;
}

// Monic characteristic polynomial coefficients (degree n first entry last):
// returns c with p(x) = x^n + c[n-1] x^{n-1} + ... + c[0].
std::vector<std::uint64_t> fp_charpoly(const FpMat& a, std::uint64_t p) {
    const std::size_t n = a.size();
    FpOps ops{p};
    FpMat m(n, FpVec(n, 0));
    std::vector<std::uint64_t> c(n, 0);
    FpMat ak = a;
    // Faddeev-LeVerrier: c_k from traces of the iterates.
    std::uint64_t ck = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // m = a * (ak + ck I)
            FpMat t = ak;
            for (std::size_t d = 0; d < n; ++d) t[d][d] = ops.add(t[d][d], ck);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t cc = 0; cc < n; ++cc) {
                    std::uint64_t acc = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        acc = ops.add(acc, ops.mul(a[r][j], t[j][cc]));
                    m[r][cc] = acc;
                }
            ak = m;
        }
        std::uint64_t tr = 0;
        for (std::size_t d = 0; d < n; ++d) tr = ops.add(tr, ak[d][d]);
        ck = ops.mul(fp::sub(0, tr, p), fp::inv(k % p, p));
        c[n - k] = ck;
    }
    return c;
}

std::uint64_t fp_poly_eval(const std::vector<std::uint64_t>& c, std::uint64_t x,
                           std::uint64_t p) {
    // monic: x^n + c[n-1] x^{n-1} + ...
    std::uint64_t acc = 1;
    for (std::size_t k = c.size(); k-- > 0;) acc = fp::add(fp::mul(acc, x, p), c[k], p);
    return acc;
}

std::vector<FpVec> fp_nullspace(FpMat m, std::uint64_t p) {
    FpOps ops{p};
    const std::size_t n = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pr = row;
        while (pr < n && m[pr][col] == 0) ++pr;
        if (pr == n) continue;
        std::swap(m[pr], m[row]);
        std::uint64_t inv = fp::inv(m[row][col], p);
        for (std::size_t j = 0; j < n; ++j) m[row][j] = ops.mul(m[row][j], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            std::uint64_t f = m[r][col];
            for (std::size_t j = 0; j < n; ++j)
                m[r][j] = ops.sub(m[r][j], ops.mul(f, m[row][j]));
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<FpVec> basis;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        FpVec v(n, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = fp::sub(0, m[k][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct TrialSearch {
    bool exhaustive = false;
    std::size_t lines = 0;
    std::optional<std::vector<FpVec>> witness;
};

constexpr std::size_t kLineBudget = 200000;

// Searches for a nonzero proper invariant totally isotropic submodule of the
// reduced tuple.  Exhaustive whenever the reduced first element splits
// semisimply with all eigenspace line counts within budget: any invariant
// submodule then contains an eigenline, all of which are enumerated.
TrialSearch search_specialized(const std::vector<FpMat>& gens, const FpMat& gram,
                               std::uint64_t p, std::mt19937_64& rng) {
    FpLin la{FpOps{p}};
    const std::size_t n = gram.size();
    TrialSearch out;

    auto try_seed = [&](const FpVec& seed) -> bool {
        auto basis = la.spin(gens, seed);
        ++out.lines;
        if (basis.empty() || basis.size() >= n) return false;
        if (!la.totally_isotropic(gram, basis)) return false;
        out.witness = std::move(basis);
        return true;
    };

    // Seed phase: standard basis and a few random vectors.
    for (std::size_t k = 0; k < n; ++k) {
        FpVec e(n, 0);
        e[k] = 1;
        if (try_seed(e)) return out;
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (std::size_t k = 0; k < 4; ++k) {
        FpVec v(n, 0);
        bool nz = false;
        for (auto& e : v) {
            e = dist(rng);
            nz = nz || e != 0;
        }
        if (nz && try_seed(v)) return out;
    }

    // Eigen phase for the first element.
    auto cp = fp_charpoly(gens[0], p);
    std::vector<std::vector<FpVec>> eigenspaces;
    std::size_t dim_sum = 0;
    for (std::uint64_t theta = 0; theta < p; ++theta) {
        if (fp_poly_eval(cp, theta, p) != 0) continue;
        FpMat m = gens[0];
        for (std::size_t d = 0; d < n; ++d) m[d][d] = fp::sub(m[d][d], theta, p);
        auto ns = fp_nullspace(std::move(m), p);
        if (ns.empty()) continue;
        dim_sum += ns.size();
        eigenspaces.push_back(std::move(ns));
        if (dim_sum >= n) break;
    }
    bool semisimple_split = dim_sum == n;

    std::size_t line_count = 0;
    bool within_budget = true;
    for (const auto& es : eigenspaces) {
        std::size_t lines_here = 1;
        for (std::size_t k = 0; k < es.size(); ++k) {
            if (lines_here > kLineBudget) break;
            lines_here *= p;
        }
        // (p^d - 1)/(p - 1) lines; the overflow-safe geometric bound suffices.
        if (lines_here > kLineBudget) {
            within_budget = false;
            break;
        }
        line_count += lines_here;
    }
    within_budget = within_budget && line_count <= kLineBudget;

    if (!semisimple_split || !within_budget) {
        // Heuristic-only search: still try the eigenvectors we have.
        for (const auto& es : eigenspaces)
            for (const auto& v : es)
                if (try_seed(v)) return out;
        out.exhaustive = false;
        return out;
    }

    // Enumerate every line of every eigenspace: vectors with last nonzero
    // coordinate (w.r.t. the eigenbasis) equal to 1.
    for (const auto& es : eigenspaces) {
        const std::size_t d = es.size();
        std::vector<std::uint64_t> coord(d, 0);
        for (std::size_t top = 0; top < d; ++top) {
            // coord[top] = 1, coords below range over F_p, coords above are 0.
            std::fill(coord.begin(), coord.end(), 0);
            coord[top] = 1;
            while (true) {
                FpVec v(n, 0);
                for (std::size_t k = 0; k <= top; ++k) {
                    if (coord[k] == 0) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        v[j] = fp::add(v[j], fp::mul(coord[k], es[k][j], p), p);
                }
                if (try_seed(v)) return out;
                // next tuple in lexicographic order over the free coords
                std::size_t k = 0;
                while (k < top && coord[k] == p - 1) {
                    coord[k] = 0;
                    ++k;
                }
                if (k == top) break;
                ++coord[k];
            }
        }
    }
    out.exhaustive = true;
    return out;
}

std::uint32_t max_field_index(const StableTupleCandidate& t) {
    std::uint32_t best = 0;
    auto scan_poly = [&](const MultiPoly& p) {
        for (const auto& [m, c] : p.terms())
            for (const auto& [v, e] : m)
                if (var_kind(v) == VarKind::X || var_kind(v) == VarKind::Y)
                    best = std::max(best, var_index(v));
    };
    auto scan_matrix = [&](const SqMatrix& m) {
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t c = 0; c < m.dim(); ++c)
                for (const auto& [mask, rf] : m.at(r, c).slots()) {
                    scan_poly(rf.num());
                    scan_poly(rf.den());
                    for (std::uint32_t l = 1, mm = mask; mm; ++l, mm >>= 1)
                        if (mm & 1u) best = std::max(best, l);
                }
    };
    for (const auto& e : t.elements) scan_matrix(e);
    scan_matrix(t.gram.matrix());
    return best;
}

}  // namespace

StabilityCertificate specialized_stability(const StableTupleCandidate& t, std::size_t trials,
                                           std::uint64_t seed, std::uint64_t prime,
                                           bool exact_input) {
    if (trials < 1) throw InputError("at least one trial is required");
    StabilityCertificate cert;
    cert.mode = StabilityCertificate::Mode::Specialized;
    cert.seed = seed;
    cert.trials = trials;
    cert.prime = prime ? prime : fp::next_prime_1mod4(10007);
    if (cert.prime % 4 != 1 || !fp::is_prime(cert.prime))
        throw InputError("specialization prime must be a prime = 1 (mod 4)");

    const std::size_t n = t.epsilon;

    // Exact witness search over K for inputs flagged as exact.
    if (exact_input && n <= 16) {
        LinAlg<TowerOps> la;
        LinAlg<TowerOps>::Mat gram(n), gens0;
        for (std::size_t r = 0; r < n; ++r) {
            gram[r].resize(n);
            for (std::size_t c = 0; c < n; ++c) gram[r][c] = t.gram.matrix().at(r, c);
        }
        std::vector<LinAlg<TowerOps>::Mat> gens;
        for (const auto& m : t.elements) {
            LinAlg<TowerOps>::Mat g(n);
            for (std::size_t r = 0; r < n; ++r) {
                g[r].resize(n);
                for (std::size_t c = 0; c < n; ++c) g[r][c] = m.at(r, c);
            }
            gens.push_back(std::move(g));
        }
        auto try_exact = [&](const std::vector<TowerElement>& seed_vec) -> bool {
            auto basis = la.spin(gens, seed_vec);
            if (basis.empty() || basis.size() >= n) return false;
            if (!la.totally_isotropic(gram, basis)) return false;
            cert.exact_witness = std::move(basis);
            return true;
        };
        bool found = false;
        for (std::size_t k = 0; k < n && !found; ++k) {
            std::vector<TowerElement> e(n);
            e[k] = TowerElement(1);
            found = try_exact(e);
        }
        for (std::size_t a = 0; a < n && !found; ++a)
            for (std::size_t b = a + 1; b < n && !found; ++b) {
                std::vector<TowerElement> e(n);
                e[a] = TowerElement(1);
                e[b] = TowerElement(1);
                found = try_exact(e);
            }
        if (found) {
            cert.verdict = StabilityVerdict::UnstableWitness;
            return cert;
        }
    }

    std::uint32_t field_index = max_field_index(t);
    std::mt19937_64 rng(seed);

    bool all_witnessed = true;
    for (std::size_t trial = 1; trial <= trials; ++trial) {
        SpecTrialLog log;
        log.trial = trial;

        std::vector<FpMat> gens;
        FpMat gram;
        bool specialized_ok = false;
        for (int attempt = 0; attempt < 64 && !specialized_ok; ++attempt) {
            SpecializationMap map = SpecializationMap::sample(cert.prime, field_index, rng);
            try {
                gens.clear();
                for (const auto& m : t.elements) gens.push_back(specialize_matrix(m, map));
                gram = specialize_matrix(t.gram.matrix(), map);
                log.map = map;
                specialized_ok = true;
            } catch (const DenominatorVanishes&) {
                continue;
            }
        }
        if (!specialized_ok)
            throw DenominatorVanishes(
                "resampling exhausted: every sampled point hit a vanishing denominator");

        TrialSearch res = search_specialized(gens, gram, cert.prime, rng);
        log.exhaustive = res.exhaustive;
        log.lines_searched = res.lines;
        log.witness = res.witness;
        bool witnessed = res.witness.has_value();
        cert.log.push_back(std::move(log));

        if (!witnessed && res.exhaustive) {
            // The stable locus is open: one submodule-free specialization
            // certifies the generic tuple.
            cert.verdict = StabilityVerdict::Stable;
            return cert;
        }
        all_witnessed = all_witnessed && witnessed;
    }
    cert.verdict = StabilityVerdict::Inconclusive;
    (void)all_witnessed;
    return cert;
}

}  // namespace stabcsa
