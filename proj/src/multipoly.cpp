#include "smc/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "smc/error.hpp"

namespace smc {

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int nvars, const Rational& a) {
    MultiPoly p(nvars);
    p.add_term(ExpVec(nvars, 0), a);
    return p;
}

MultiPoly MultiPoly::monomial(ExpVec e, const Rational& a) {
    MultiPoly p((int)e.size());
    p.add_term(e, a);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    ExpVec e(nvars, 0);
    e[index] = 1;
    return monomial(e, Rational(1));
}

Rational MultiPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const ExpVec& e, const Rational& a) {
    if ((int)e.size() != n_) fail(ErrorKind::BadParameters, "exponent vector length mismatch");
    if (a.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, a);
    if (!inserted) {
        it->second += a;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_);
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, -a);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    MultiPoly r(n_);
    if (s.is_zero()) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * s);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) fail(ErrorKind::BadParameters, "negative polynomial power");
    MultiPoly r = constant(n_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(n_);
    for (const auto& [e, a] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.add_term(d, a * Rational(e[var]));
    }
    return r;
}

int MultiPoly::total_degree() const {
    if (is_zero()) return -1;
    const ExpVec& top = terms_.rbegin()->first;
    return std::accumulate(top.begin(), top.end(), 0);
}

std::optional<int> MultiPoly::homogeneity() const {
    if (is_zero()) return std::nullopt;
    int d = -1;
    for (const auto& [e, a] : terms_) {
        int s = std::accumulate(e.begin(), e.end(), 0);
        if (d < 0) d = s;
        else if (s != d) return std::nullopt;
    }
    return d;
}

std::set<ExpVec> MultiPoly::support() const {
    std::set<ExpVec> s;
    for (const auto& [e, a] : terms_) s.insert(e);
    return s;
}

ExpVec MultiPoly::min_exponents() const {
    ExpVec m(n_, 0);
    bool first = true;
    for (const auto& [e, a] : terms_) {
        if (first) { m = e; first = false; continue; }
        for (int i = 0; i < n_; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

MultiPoly MultiPoly::divide_by_monomial(const ExpVec& e) const {
    MultiPoly r(n_);
    for (const auto& [t, a] : terms_) {
        ExpVec q = t;
        for (int i = 0; i < n_; ++i) {
            q[i] -= e[i];
            if (q[i] < 0) fail(ErrorKind::BadParameters, "monomial does not divide polynomial");
        }
        r.terms_.emplace(q, a);
    }
    return r;
}

MultiPoly MultiPoly::permute_variables(const std::vector<int>& perm) const {
    MultiPoly r(n_);
    for (const auto& [e, a] : terms_) {
        ExpVec p(n_);
        for (int i = 0; i < n_; ++i) p[i] = e[perm[i]];
        r.terms_.emplace(std::move(p), a);
    }
    return r;
}

} // namespace smc
