#include "smc/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "smc/error.hpp"

namespace smc {

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& a) {
    UniPoly p;
    if (!a.is_zero()) p.c_ = {a};
    return p;
}

UniPoly UniPoly::monomial(int deg, const Rational& a) {
    UniPoly p;
    if (a.is_zero()) return p;
    p.c_.assign(deg + 1, Rational(0));
    p.c_[deg] = a;
    return p;
}

UniPoly UniPoly::linear_shift(const Rational& a) {
    UniPoly p;
    p.c_ = {a, Rational(1)};
    return p;
}

const Rational& UniPoly::leading() const {
    if (is_zero()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

const Rational& UniPoly::coeff(int i) const {
    static const Rational kZero(0);
    if (i < 0 || i >= (int)c_.size()) return kZero;
    return c_[i];
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& a) const {
    if (a.is_zero()) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) fail(ErrorKind::BadParameters, "negative polynomial power");
    UniPoly r = constant(Rational(1));
    UniPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (int i = (int)c_.size() - 1; i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational((long)i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(rem.degree() - divisor.degree() + 1, Rational(0));
    Rational lc_inv = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int k = rem.degree() - divisor.degree();
        Rational f = rem.leading() * lc_inv;
        q[k] = f;
        for (int i = 0; i <= divisor.degree(); ++i) rem.c_[k + i] -= f * divisor.c_[i];
        rem.normalize();
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        fail(ErrorKind::InternalInconsistency, "inexact polynomial division");
    return q;
}

int UniPoly::root_multiplicity(const Rational& r) const {
    if (is_zero()) fail(ErrorKind::ZeroPolynomial, "root multiplicity in zero polynomial");
    UniPoly p = *this;
    UniPoly lin = linear_shift(-r);
    int m = 0;
    while (!p.is_constant() && p.eval(r).is_zero()) {
        p = p.divide_exact(lin);
        ++m;
    }
    return m;
}

UniPoly UniPoly::deflate(const Rational& r, int k) const {
    UniPoly p = *this;
    UniPoly lin = linear_shift(-r);
    for (int i = 0; i < k; ++i) p = p.divide_exact(lin);
    return p;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a.is_zero()) continue;
        Rational mag = a.abs();
        if (first) {
            if (a.is_negative()) os << "-";
            first = false;
        } else {
            os << (a.is_negative() ? " - " : " + ");
        }
        bool unit = (mag == Rational(1));
        if (i == 0 || !unit) os << mag.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Integer-primitive form: clears denominators and divides out integer content.
std::vector<mpz_class> primitive_z(const UniPoly& p) {
    mpz_class den = 1;
    for (const auto& a : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.den().get_mpz_t());
    std::vector<mpz_class> z(p.coeffs().size());
    mpz_class content = 0;
    for (size_t i = 0; i < z.size(); ++i) {
        z[i] = p.coeffs()[i].num() * (den / p.coeffs()[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& a : z) a /= content;
    return z;
}

void strip_z(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive_z(std::vector<mpz_class>& v) {
    mpz_class content = 0;
    for (const auto& a : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.get_mpz_t());
    if (content > 1)
        for (auto& a : v) a /= content;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class la = a.back();
        size_t k = a.size() - b.size();
        for (auto& x : a) x *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] -= la * b[i];
        strip_z(a);
    }
    return a;
}

} // namespace

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<mpz_class> u = primitive_z(a), v = primitive_z(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<mpz_class> r = pseudo_rem(u, v);
        make_primitive_z(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> c(u.size());
    for (size_t i = 0; i < u.size(); ++i) c[i] = Rational(u[i]);
    return UniPoly(std::move(c)).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.is_constant()) return out;
    // Yun: with a0 monic, g = gcd(a0, a0'), c1 = a0/g, d1 = a0'/g - c1'.
    UniPoly a0 = p.monic();
    UniPoly g = unipoly_gcd(a0, a0.derivative());
    UniPoly c = a0.divide_exact(g);
    UniPoly d = a0.derivative().divide_exact(g) - c.derivative();
    int i = 1;
    while (!c.is_constant()) {
        UniPoly f = unipoly_gcd(c, d);
        if (!f.is_constant()) out.emplace_back(f.monic(), i);
        c = c.divide_exact(f);
        d = d.divide_exact(f) - c.derivative();
        ++i;
    }
    return out;
}

namespace {

// Sturm chain sign variations at x.
int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        auto [q, r] = chain[chain.size() - 2].divmod(chain.back());
        (void)q;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

// Minimal-denominator rational in the open interval (a, b).
Rational simplest_in_interval(const Rational& a, const Rational& b) {
    if (a >= b) fail(ErrorKind::InternalInconsistency, "empty interval");
    if (a < Rational(0) && b > Rational(0)) return Rational(0);
    if (b <= Rational(0)) return -simplest_in_interval(-b, -a);
    // 0 <= a < b
    mpz_class fa = a.num() / a.den(); // floor for nonnegative a
    Rational n{fa};
    if (n + Rational(1) < b) return n + Rational(1);
    if (a.is_integer()) {
        // (n, b) with b - n <= 1: smallest denominator is floor(1/(b-n)) + 1
        Rational c = b - n;
        Rational inv = Rational(1) / c;
        mpz_class q = inv.num() / inv.den();
        q += 1;
        return n + Rational(mpz_class(1), q);
    }
    Rational fr_a = a - n, fr_b = b - n;
    if (fr_b > Rational(1)) fr_b = Rational(1);
    return n + simplest_in_interval(Rational(1) / fr_b, Rational(1) / fr_a).inverse();
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of zero polynomial");
    std::vector<std::pair<Rational, int>> out;
    if (p.is_constant()) return out;

    UniPoly sf = p.divide_exact(unipoly_gcd(p, p.derivative())).monic();
    std::vector<Rational> roots;
    if (sf.eval(Rational(0)).is_zero()) {
        roots.push_back(Rational(0));
        sf = sf.deflate(Rational(0), 1);
    }

    if (!sf.is_constant()) {
        // Cauchy bound on root magnitude
        Rational bound(1);
        for (int i = 0; i < sf.degree(); ++i) {
            Rational m = (sf.coeff(i) / sf.leading()).abs();
            if (m > bound) bound = m;
        }
        bound += Rational(1);

        auto chain = sturm_chain(sf);
        // Max denominator of a rational root of the primitive integer form.
        std::vector<mpz_class> z = primitive_z(sf);
        mpz_class lc = z.back();
        if (lc < 0) lc = -lc;
        Rational lc_bound{lc};

        struct Interval { Rational lo, hi; int count; };
        std::vector<Interval> stack{{-bound, bound, 0}};
        stack[0].count = sign_variations(chain, -bound) - sign_variations(chain, bound);
        while (!stack.empty()) {
            Interval iv = stack.back();
            stack.pop_back();
            if (iv.count == 0) continue;
            if (iv.count == 1) {
                // Single real root in (lo, hi): locate it or rule out rationality.
                Rational lo = iv.lo, hi = iv.hi;
                while (true) {
                    Rational mid = simplest_in_interval(lo, hi);
                    if (sf.eval(mid).is_zero()) {
                        roots.push_back(mid);
                        break;
                    }
                    if (Rational(mid.den()) > lc_bound) break; // no rational root here
                    if ((sf.eval(lo).sign()) * (sf.eval(mid).sign()) < 0)
                        hi = mid;
                    else
                        lo = mid;
                }
                continue;
            }
            Rational mid = (iv.lo + iv.hi) * Rational(1, 2);
            if (sf.eval(mid).is_zero()) {
                roots.push_back(mid);
                // nudge the split point off the root
                Rational eps = (iv.hi - iv.lo) * Rational(1, 1024);
                while (sf.eval(mid - eps).is_zero() || sf.eval(mid + eps).is_zero()) eps *= Rational(1, 2);
                int left = sign_variations(chain, iv.lo) - sign_variations(chain, mid - eps);
                int right = sign_variations(chain, mid + eps) - sign_variations(chain, iv.hi);
                stack.push_back({iv.lo, mid - eps, left});
                stack.push_back({mid + eps, iv.hi, right});
            } else {
                int left = sign_variations(chain, iv.lo) - sign_variations(chain, mid);
                stack.push_back({iv.lo, mid, left});
                stack.push_back({mid, iv.hi, iv.count - left});
            }
        }
    }

    std::sort(roots.begin(), roots.end());
    for (const auto& r : roots) out.emplace_back(r, p.root_multiplicity(r));
    return out;
}

bool splits_over_q(const UniPoly& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "splitting test on zero polynomial");
    int total = 0;
    for (const auto& [r, m] : rational_roots(p)) total += m;
    return total == p.degree();
}

} // namespace smc
