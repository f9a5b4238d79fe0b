#include "smc/logder.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "smc/error.hpp"

namespace smc {

bool DerivationSpace::contains(const RatMatrix& q) const {
    std::vector<RatRow> rows;
    rows.reserve(basis.size());
    for (const auto& b : basis) rows.emplace_back(b.entries().begin(), b.entries().end());
    return in_row_span(rows, RatRow(q.entries().begin(), q.entries().end()));
}

MultiPoly apply_derivation(const RatMatrix& q, const MultiPoly& f) {
    int n = f.nvars();
    MultiPoly out(n);
    for (int c = 0; c < n; ++c) {
        MultiPoly dc = f.derivative(c);
        if (dc.is_zero()) continue;
        for (int r = 0; r < n; ++r) {
            if (q.at(r, c).is_zero()) continue;
            out += (dc * MultiPoly::variable(n, r)) * q.at(r, c);
        }
    }
    return out;
}

namespace {

int require_homogeneous(const MultiPoly& f) {
    auto d = f.homogeneity();
    if (!d) fail(ErrorKind::NotHomogeneous, "polynomial is not homogeneous");
    return *d;
}

// Rows of the linear system "delta_Q . f = 0" in the n^2 unknowns q_rc
// (flattened row-major): one row per monomial in the image.
std::vector<RatRow> annihilation_system(const MultiPoly& f) {
    int n = f.nvars();
    std::map<ExpVec, RatRow, GradedLexLess> eq;
    for (int c = 0; c < n; ++c) {
        MultiPoly dc = f.derivative(c);
        for (int r = 0; r < n; ++r) {
            // x_r * df/dx_c contributes to unknown q_rc
            for (const auto& [e, a] : dc.terms()) {
                ExpVec m = e;
                m[r] += 1;
                auto it = eq.try_emplace(m, RatRow(n * n, Rational(0))).first;
                it->second[r * n + c] += a;
            }
        }
    }
    std::vector<RatRow> rows;
    rows.reserve(eq.size());
    for (auto& [e, row] : eq) rows.push_back(std::move(row));
    return rows;
}

std::vector<RatMatrix> rows_to_matrices(const std::vector<RatRow>& rows, int n) {
    std::vector<RatMatrix> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.emplace_back(n, std::vector<Rational>(r.begin(), r.end()));
    return out;
}

} // namespace

DerivationSpace degree0_annihilating(const MultiPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "derivations of the zero polynomial");
    require_homogeneous(f);
    int n = f.nvars();
    auto basis_rows = nullspace(annihilation_system(f), n * n);
    DerivationSpace sp;
    sp.n = n;
    sp.kind = DerivationKind::Annihilating;
    sp.basis = rows_to_matrices(basis_rows, n);
    for (const auto& q : sp.basis)
        if (!apply_derivation(q, f).is_zero())
            fail(ErrorKind::InternalInconsistency, "annihilating basis element fails resubstitution");
    return sp;
}

DerivationSpace degree0_logarithmic(const MultiPoly& f) {
    DerivationSpace ann = degree0_annihilating(f);
    int n = f.nvars();
    std::vector<RatRow> rows;
    rows.reserve(ann.basis.size() + 1);
    for (const auto& b : ann.basis) rows.emplace_back(b.entries().begin(), b.entries().end());
    RatMatrix id = RatMatrix::identity(n);
    rows.emplace_back(id.entries().begin(), id.entries().end());
    rref(rows);
    DerivationSpace sp;
    sp.n = n;
    sp.kind = DerivationKind::Logarithmic;
    sp.basis = rows_to_matrices(rows, n);
    return sp;
}

int symmetry_dimension(const MultiPoly& f) {
    return degree0_annihilating(f).dimension();
}

bool is_cone(const MultiPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "cone test on zero polynomial");
    require_homogeneous(f);
    int n = f.nvars();
    // unknowns c_i in sum c_i df/dx_i = 0
    std::map<ExpVec, RatRow, GradedLexLess> eq;
    for (int i = 0; i < n; ++i) {
        MultiPoly di = f.derivative(i);
        for (const auto& [e, a] : di.terms()) {
            auto it = eq.try_emplace(e, RatRow(n, Rational(0))).first;
            it->second[i] += a;
        }
    }
    std::vector<RatRow> rows;
    for (auto& [e, row] : eq) rows.push_back(std::move(row));
    return !nullspace(rows, n).empty();
}

std::optional<RatMatrix> find_semisimple_nontraceless(const MultiPoly& f) {
    if (is_cone(f)) fail(ErrorKind::ConeInput, "divisor is a cone (a degree -1 derivation exists)");
    DerivationSpace ann = degree0_annihilating(f);
    const RatMatrix* witness = nullptr;
    for (const auto& q : ann.basis)
        if (!q.trace().is_zero()) { witness = &q; break; }
    if (!witness) return std::nullopt; // trace functional vanishes identically
    auto [s, nil] = jordan_chevalley(*witness);
    (void)nil;
    if (!ann.contains(s))
        fail(ErrorKind::InternalInconsistency, "semi-simple part escaped the derivation space");
    if (s.trace() != witness->trace())
        fail(ErrorKind::InternalInconsistency, "nilpotent part carries trace");
    return s;
}

std::vector<WeightVector> find_diagonal(const MultiPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "diagonal derivations of zero polynomial");
    int d = require_homogeneous(f);
    int n = f.nvars();
    // unknowns (w_1..w_n, lambda): w.e - lambda = 0 for each support point
    std::vector<RatRow> rows;
    for (const auto& [e, a] : f.terms()) {
        RatRow row(n + 1, Rational(0));
        for (int i = 0; i < n; ++i) row[i] = Rational(e[i]);
        row[n] = Rational(-1);
        rows.push_back(std::move(row));
    }
    auto sol = nullspace(rows, n + 1);
    // quotient by the Euler solution (1,...,1; d)
    std::vector<RatRow> stacked;
    RatRow euler(n + 1, Rational(1));
    euler[n] = Rational(d);
    stacked.push_back(euler);
    for (auto& v : sol) stacked.push_back(std::move(v));
    rref(stacked);
    std::vector<WeightVector> out;
    for (size_t i = 1; i < stacked.size(); ++i) {
        WeightVector wv;
        wv.w.assign(stacked[i].begin(), stacked[i].begin() + n);
        wv.w_degree = stacked[i][n];
        out.push_back(std::move(wv));
    }
    return out;
}

std::vector<ExpVec> monomials_of_degree(int nvars, int degree) {
    std::vector<ExpVec> out;
    if (degree < 0) return out;
    ExpVec cur(nvars, 0);
    std::function<void(int, int)> go = [&](int pos, int rem) {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            go(pos + 1, rem - e);
        }
    };
    go(0, degree);
    return out;
}

namespace {

// Matrix of the action of delta_Q on the span of the given monomials;
// column j holds the coordinates of delta applied to the j-th monomial.
std::vector<RatRow> action_on_monomials(const RatMatrix& q, const std::vector<ExpVec>& mons) {
    std::map<ExpVec, int> index;
    for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = (int)i;
    std::vector<RatRow> m(mons.size(), RatRow(mons.size(), Rational(0)));
    for (size_t j = 0; j < mons.size(); ++j) {
        MultiPoly img = apply_derivation(q, MultiPoly::monomial(mons[j], Rational(1)));
        for (const auto& [e, a] : img.terms()) {
            auto it = index.find(e);
            if (it == index.end())
                fail(ErrorKind::InternalInconsistency, "derivation action left the degree component");
            m[it->second][j] += a;
        }
    }
    return m;
}

std::vector<Rational> rational_eigenvalues_or_throw(const RatMatrix& q) {
    UniPoly mp = minimal_polynomial(q);
    auto roots = rational_roots(mp);
    int count = 0;
    for (const auto& [r, m] : roots) count += m;
    if (count != mp.degree())
        fail(ErrorKind::NonRationalEigenvalues,
             "minimal polynomial does not split over Q: " + mp.str("Y"));
    std::vector<Rational> ev;
    for (const auto& [r, m] : roots) ev.push_back(r);
    return ev;
}

} // namespace

std::vector<RatRow> xi_space(const MultiPoly& f, int p, const std::vector<RatMatrix>& gens) {
    if (p < 0) fail(ErrorKind::BadParameters, "negative degree");
    int n = f.nvars();
    DerivationSpace ann = degree0_annihilating(f);
    auto mons = monomials_of_degree(n, p);
    std::vector<RatRow> collected;
    for (const auto& g : gens) {
        if (!ann.contains(g))
            fail(ErrorKind::NotInSpace, "generator is not an annihilating derivation");
        if (!is_semisimple(g))
            fail(ErrorKind::NotInSpace, "generator is not semi-simple");
        auto eigen = rational_eigenvalues_or_throw(g);
        Rational tr = g.trace();
        auto act_rows = action_on_monomials(g, mons);
        // action eigenvalues are the degree-p sums of matrix eigenvalues
        std::vector<Rational> sums;
        for (const auto& e : monomials_of_degree((int)eigen.size(), p)) {
            Rational s(0);
            for (size_t i = 0; i < eigen.size(); ++i) s += Rational(e[i]) * eigen[i];
            sums.push_back(s);
        }
        std::sort(sums.begin(), sums.end());
        sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
        for (const auto& lambda : sums) {
            if (lambda == -tr) continue;
            std::vector<RatRow> shifted = act_rows;
            for (size_t i = 0; i < shifted.size(); ++i) shifted[i][i] -= lambda;
            for (auto& v : nullspace(shifted, (int)mons.size())) collected.push_back(std::move(v));
        }
    }
    rref(collected);
    return collected;
}

BetaResult beta_polynomial(const MultiPoly& f, const std::vector<RatMatrix>& gens) {
    int d = require_homogeneous(f);
    int n = f.nvars();
    BetaResult res;
    res.beta = UniPoly::constant(Rational(1));
    for (int p = 0; p < (d - 1) * n; ++p) {
        size_t full = monomials_of_degree(n, p).size();
        size_t dim = gens.empty() ? 0 : xi_space(f, p, gens).size();
        if (dim != full) {
            res.deficient_p.push_back(p);
            res.beta *= UniPoly::linear_shift(Rational(p + n, d));
        }
    }
    res.divisibility_note =
        "b_D(s) divides b_f(s) divides b_D(s)*beta(s); beta is an upper-bound certificate";
    return res;
}

} // namespace smc
