#include "smc/matrix.hpp"

#include <algorithm>

#include "smc/error.hpp"

namespace smc {

RatMatrix::RatMatrix(int n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
    if ((int)a_.size() != n * n) fail(ErrorKind::BadParameters, "matrix entry count mismatch");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
    RatMatrix m((int)d.size());
    for (int i = 0; i < (int)d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

bool RatMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational RatMatrix::trace() const {
    Rational t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    int n = a.size();
    RatMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

RatMatrix RatMatrix::pow(int e) const {
    RatMatrix r = identity(n_), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RatMatrix RatMatrix::inverse() const {
    int n = n_;
    std::vector<RatRow> aug(n, RatRow(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = at(i, j);
        aug[i][n + i] = Rational(1);
    }
    auto pivots = rref(aug);
    if ((int)pivots.size() != n || pivots.back() != n - 1)
        fail(ErrorKind::BadParameters, "singular matrix has no inverse");
    RatMatrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug[i][n + j];
    return inv;
}

UniPoly characteristic_polynomial(const RatMatrix& a) {
    // Faddeev-LeVerrier
    int n = a.size();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    RatMatrix mk(n); // zero
    for (int k = 1; k <= n; ++k) {
        // M_k = A * (M_{k-1} + c_{n-k+1} I)
        RatMatrix t = mk;
        for (int i = 0; i < n; ++i) t.at(i, i) += c[n - k + 1];
        mk = a * t;
        c[n - k] = -(mk.trace() / Rational(k));
    }
    return UniPoly(std::move(c));
}

RatMatrix poly_eval(const UniPoly& p, const RatMatrix& a) {
    int n = a.size();
    RatMatrix acc(n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        if (!p.coeff(i).is_zero())
            for (int d = 0; d < n; ++d) acc.at(d, d) += p.coeff(i);
    }
    return acc;
}

UniPoly minimal_polynomial(const RatMatrix& a) {
    // Krylov on the flattened powers I, A, A^2, ...: the first linear
    // dependence gives the monic minimal polynomial.
    int n = a.size();
    int dim = n * n;
    std::vector<RatRow> echelon;         // rows in echelon form
    std::vector<RatRow> combos;          // same-length coefficient history
    RatMatrix pw = RatMatrix::identity(n);
    for (int k = 0;; ++k) {
        RatRow v(pw.entries().begin(), pw.entries().end());
        RatRow coef(k + 1, Rational(0));
        coef[k] = Rational(1);
        // reduce v against the echelon rows, tracking the combination
        for (size_t r = 0; r < echelon.size(); ++r) {
            int lead = -1;
            for (int j = 0; j < dim; ++j)
                if (!echelon[r][j].is_zero()) { lead = j; break; }
            if (lead >= 0 && !v[lead].is_zero()) {
                Rational f = v[lead] / echelon[r][lead];
                for (int j = 0; j < dim; ++j) v[j] -= f * echelon[r][j];
                for (size_t j = 0; j < combos[r].size() && j < coef.size(); ++j)
                    coef[j] -= f * combos[r][j];
            }
        }
        bool zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
        if (zero) {
            // coef expresses 0 = sum coef[i] A^i with coef[k] = 1
            return UniPoly(std::move(coef)).monic();
        }
        echelon.push_back(std::move(v));
        combos.push_back(std::move(coef));
        pw = pw * a;
        if (k > dim) fail(ErrorKind::InternalInconsistency, "minimal polynomial search overran");
    }
}

std::pair<RatMatrix, RatMatrix> jordan_chevalley(const RatMatrix& a) {
    UniPoly chi = characteristic_polynomial(a);
    UniPoly g = chi.divide_exact(unipoly_gcd(chi, chi.derivative())).monic();
    UniPoly gp = g.derivative();
    RatMatrix s = a;
    int n = a.size();
    for (int iter = 0; iter <= 2 * n + 4; ++iter) {
        RatMatrix gs = poly_eval(g, s);
        if (gs.is_zero()) {
            return {s, a - s};
        }
        s = s - gs * poly_eval(gp, s).inverse();
    }
    fail(ErrorKind::InternalInconsistency, "Jordan-Chevalley Newton iteration did not terminate");
}

bool is_semisimple(const RatMatrix& a) {
    UniPoly m = minimal_polynomial(a);
    return unipoly_gcd(m, m.derivative()).degree() == 0;
}

bool is_nilpotent(const RatMatrix& a) {
    return a.pow(a.size()).is_zero();
}

std::vector<int> rref(std::vector<RatRow>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    int ncols = (int)rows[0].size();
    int r = 0;
    for (int c = 0; c < ncols && r < (int)rows.size(); ++c) {
        int pivot = -1;
        for (int i = r; i < (int)rows.size(); ++i)
            if (!rows[i][c].is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        Rational inv = rows[r][c].inverse();
        for (int j = c; j < ncols; ++j) rows[r][j] *= inv;
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r); // drop zero rows
    return pivots;
}

std::vector<RatRow> nullspace(const std::vector<RatRow>& rows, int ncols) {
    std::vector<RatRow> m = rows;
    for (const auto& row : m)
        if ((int)row.size() != ncols) fail(ErrorKind::BadParameters, "nullspace row width mismatch");
    auto pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatRow> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        RatRow v(ncols, Rational(0));
        v[c] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    rref(basis); // canonical form
    return basis;
}

bool in_row_span(const std::vector<RatRow>& rref_basis, const RatRow& v) {
    RatRow w = v;
    for (const auto& row : rref_basis) {
        int lead = -1;
        for (size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) { lead = (int)j; break; }
        if (lead >= 0 && !w[lead].is_zero()) {
            Rational f = w[lead] / row[lead];
            for (size_t j = 0; j < row.size(); ++j) w[j] -= f * row[j];
        }
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
}

} // namespace smc
