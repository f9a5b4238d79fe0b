#include "smc/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "smc/error.hpp"

namespace smc {

BiPoly BiPoly::constant(const Rational& a) {
    BiPoly p;
    p.add_term(0, 0, a);
    return p;
}

BiPoly BiPoly::monomial(int dl, int dt, const Rational& a) {
    BiPoly p;
    p.add_term(dl, dt, a);
    return p;
}

BiPoly BiPoly::from_l_poly(const UniPoly& p) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term(i, 0, p.coeff(i));
    return r;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

int BiPoly::degree_l() const {
    int d = -1;
    for (const auto& [k, a] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree_t() const {
    int d = -1;
    for (const auto& [k, a] : terms_) d = std::max(d, k.second);
    return d;
}

void BiPoly::add_term(int dl, int dt, const Rational& a) {
    if (dl < 0 || dt < 0) fail(ErrorKind::BadParameters, "negative exponent in bivariate term");
    if (a.is_zero()) return;
    Key k{dl, dt};
    auto [it, inserted] = terms_.emplace(k, a);
    if (!inserted) {
        it->second += a;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, a] : terms_) r.terms_.emplace(k, -a);
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly BiPoly::operator*(const Rational& s) const {
    BiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [k, a] : terms_) r.terms_.emplace(k, a * s);
    return r;
}

std::vector<UniPoly> BiPoly::t_coefficients() const {
    std::vector<std::vector<Rational>> c(degree_t() + 1);
    for (const auto& [k, a] : terms_) {
        auto& v = c[k.second];
        if ((int)v.size() <= k.first) v.resize(k.first + 1, Rational(0));
        v[k.first] = a;
    }
    std::vector<UniPoly> out;
    out.reserve(c.size());
    for (auto& v : c) out.emplace_back(std::move(v));
    return out;
}

BiPoly BiPoly::from_t_coefficients(const std::vector<UniPoly>& c) {
    BiPoly r;
    for (size_t j = 0; j < c.size(); ++j)
        for (int i = 0; i <= c[j].degree(); ++i) r.add_term(i, (int)j, c[j].coeff(i));
    return r;
}

UniPoly BiPoly::eval_t(const Rational& t) const {
    UniPoly out;
    auto cs = t_coefficients();
    Rational p(1);
    for (size_t j = 0; j < cs.size(); ++j) {
        out += cs[j] * p;
        p *= t;
    }
    return out;
}

UniPoly BiPoly::eval_l(const Rational& l) const {
    std::vector<Rational> c;
    for (const auto& [k, a] : terms_) {
        if ((int)c.size() <= k.second) c.resize(k.second + 1, Rational(0));
        c[k.second] += a * l.pow(k.first);
    }
    return UniPoly(std::move(c));
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, a] = *it;
        Rational mag = a.abs();
        if (first) {
            if (a.is_negative()) os << "-";
            first = false;
        } else {
            os << (a.is_negative() ? " - " : " + ");
        }
        bool unit = (mag == Rational(1));
        bool has_var = k.first > 0 || k.second > 0;
        if (!has_var || !unit) os << mag.str();
        if (k.first > 0) {
            if (!unit) os << "*";
            os << "L";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            if (!unit || k.first > 0) os << "*";
            os << "T";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

namespace {

UniPoly content_l(const std::vector<UniPoly>& c) {
    UniPoly g;
    for (const auto& p : c) g = unipoly_gcd(g, p);
    return g;
}

std::vector<UniPoly> divide_content(const std::vector<UniPoly>& c, const UniPoly& g) {
    std::vector<UniPoly> out;
    out.reserve(c.size());
    for (const auto& p : c) out.push_back(p.is_zero() ? p : p.divide_exact(g));
    return out;
}

void strip_top(std::vector<UniPoly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Pseudo-remainder in (Q[L])[T].
std::vector<UniPoly> pseudo_rem_t(std::vector<UniPoly> a, const std::vector<UniPoly>& b) {
    const UniPoly& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        UniPoly la = a.back();
        size_t k = a.size() - b.size();
        for (auto& x : a) x = x * lb;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] -= la * b[i];
        strip_top(a);
    }
    return a;
}

} // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
    auto normalize_lead = [](const BiPoly& p) {
        if (p.is_zero()) return p;
        return p * p.terms().rbegin()->second.inverse();
    };
    if (a.is_zero()) return normalize_lead(b);
    if (b.is_zero()) return normalize_lead(a);

    std::vector<UniPoly> u = a.t_coefficients(), v = b.t_coefficients();
    UniPoly cu = content_l(u), cv = content_l(v);
    u = divide_content(u, cu);
    v = divide_content(v, cv);
    UniPoly content_gcd = unipoly_gcd(cu, cv);

    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        if (v.size() == 1) {
            // primitive and degree 0 in T: gcd of primitive parts is 1
            v.clear();
            u = {UniPoly::constant(Rational(1))};
            break;
        }
        std::vector<UniPoly> r = pseudo_rem_t(u, v);
        if (!r.empty()) r = divide_content(r, content_l(r));
        u = std::move(v);
        v = std::move(r);
    }
    BiPoly prim = BiPoly::from_t_coefficients(u);
    return normalize_lead(prim * BiPoly::from_l_poly(content_gcd));
}

BiPoly bipoly_divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) fail(ErrorKind::ZeroPolynomial, "bivariate division by zero");
    if (a.is_zero()) return a;
    // long division in (Q[L])[T] with exact UniPoly coefficient division
    std::vector<UniPoly> u = a.t_coefficients(), v = b.t_coefficients();
    std::vector<UniPoly> q(u.size() >= v.size() ? u.size() - v.size() + 1 : 0);
    while (u.size() >= v.size() && !u.empty()) {
        UniPoly f = u.back().divide_exact(v.back());
        size_t k = u.size() - v.size();
        q[k] = f;
        for (size_t i = 0; i < v.size(); ++i) u[k + i] -= f * v[i];
        if (!u.empty() && !u.back().is_zero())
            fail(ErrorKind::InternalInconsistency, "inexact bivariate division");
        strip_top(u);
    }
    if (!u.empty()) fail(ErrorKind::InternalInconsistency, "inexact bivariate division");
    return BiPoly::from_t_coefficients(q);
}

BiRatFun::BiRatFun(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::ZeroPolynomial, "bivariate rational with zero denominator");
    if (num_.is_zero()) {
        den_ = BiPoly::constant(Rational(1));
        return;
    }
    BiPoly g = bipoly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = bipoly_divide_exact(num_, g);
        den_ = bipoly_divide_exact(den_, g);
    }
    Rational lead = den_.terms().rbegin()->second;
    if (lead != Rational(1)) {
        Rational inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

BiRatFun operator+(const BiRatFun& a, const BiRatFun& b) {
    return BiRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BiRatFun operator-(const BiRatFun& a, const BiRatFun& b) {
    return BiRatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BiRatFun operator*(const BiRatFun& a, const BiRatFun& b) {
    return BiRatFun(a.num_ * b.num_, a.den_ * b.den_);
}

BiRatFun operator/(const BiRatFun& a, const BiRatFun& b) {
    if (b.is_zero()) fail(ErrorKind::BadParameters, "division by zero bivariate rational");
    return BiRatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string BiRatFun::str() const {
    if (is_zero()) return "0";
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace smc
