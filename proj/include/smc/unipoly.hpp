#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smc/rational.hpp"

namespace smc {

// Dense univariate polynomial over Q. Trailing zeros are stripped; the zero
// polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& a);
    static UniPoly monomial(int deg, const Rational& a);
    // s + a, handy for building products of linear factors
    static UniPoly linear_shift(const Rational& a);

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& leading() const;
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly operator*(const Rational& a) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly pow(int e) const;
    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    // Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    // Exact division, throws if remainder is nonzero.
    UniPoly divide_exact(const UniPoly& divisor) const;

    // Multiplicity of r as a root (0 if not a root).
    int root_multiplicity(const Rational& r) const;
    // Quotient by (s - r)^k; r must have multiplicity >= k.
    UniPoly deflate(const Rational& r, int k) const;

    std::string str(const std::string& var = "s") const;

private:
    void normalize();
    std::vector<Rational> c_; // c_[i] is the coefficient of s^i
};

// Monic gcd via primitive pseudo-remainder sequence over Z.
UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b);

// Yun decomposition: pairwise-coprime squarefree monic factors with strictly
// increasing multiplicities; product over factor^multiplicity equals the
// input up to a scalar. Throws ZeroPolynomial on zero input.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// All rational roots with multiplicities, found by Sturm isolation plus
// simplest-fraction refinement and verified by exact substitution.
std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p);

// True when p factors completely into linear factors over Q.
bool splits_over_q(const UniPoly& p);

} // namespace smc
