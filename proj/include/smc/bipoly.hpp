#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "smc/unipoly.hpp"

namespace smc {

// Sparse bivariate polynomial over Q in formal variables (L, T), stored in
// graded-lex term order.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (L exponent, T exponent)

    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            int da = a.first + a.second, db = b.first + b.second;
            if (da != db) return da < db;
            return a < b;
        }
    };

    BiPoly() = default;

    static BiPoly constant(const Rational& a);
    static BiPoly monomial(int dl, int dt, const Rational& a);
    static BiPoly from_l_poly(const UniPoly& p); // p(L)

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Key, Rational, KeyLess>& terms() const { return terms_; }
    int degree_l() const;
    int degree_t() const;

    void add_term(int dl, int dt, const Rational& a);

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator*(const Rational& s) const;
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    // Coefficients as polynomials in L, indexed by T-degree.
    std::vector<UniPoly> t_coefficients() const;
    static BiPoly from_t_coefficients(const std::vector<UniPoly>& c);

    UniPoly eval_t(const Rational& t) const; // substitute a value for T
    UniPoly eval_l(const Rational& l) const; // substitute a value for L

    std::string str() const;

private:
    std::map<Key, Rational, KeyLess> terms_;
};

// Gcd via primitive pseudo-remainder sequence in (Q[L])[T]; result has
// leading graded-lex coefficient 1.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_divide_exact(const BiPoly& a, const BiPoly& b);

// Bivariate rational function, canonical reduced form: gcd removed and the
// leading graded-lex coefficient of the denominator equal to 1.
class BiRatFun {
public:
    BiRatFun() : num_(), den_(BiPoly::constant(Rational(1))) {}
    BiRatFun(BiPoly num, BiPoly den);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend BiRatFun operator+(const BiRatFun& a, const BiRatFun& b);
    friend BiRatFun operator-(const BiRatFun& a, const BiRatFun& b);
    friend BiRatFun operator*(const BiRatFun& a, const BiRatFun& b);
    friend BiRatFun operator/(const BiRatFun& a, const BiRatFun& b);
    friend bool operator==(const BiRatFun& a, const BiRatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    BiPoly num_, den_;
};

} // namespace smc
