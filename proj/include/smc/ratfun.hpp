#pragma once

#include <string>
#include <utility>

#include "smc/unipoly.hpp"

namespace smc {

// Univariate rational function over Q, kept normalized: gcd(num, den) = 1
// and the denominator monic.
class RatFun {
public:
    RatFun() : num_(UniPoly::zero()), den_(UniPoly::constant(Rational(1))) {}
    RatFun(UniPoly num, UniPoly den);
    explicit RatFun(const UniPoly& num) : RatFun(num, UniPoly::constant(Rational(1))) {}
    explicit RatFun(const Rational& a) : RatFun(UniPoly::constant(a)) {}

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Value at x; the denominator must not vanish there.
    Rational eval(const Rational& x) const;

    std::string str(const std::string& var = "s") const;

private:
    UniPoly num_, den_;
};

struct PoleData {
    int order = 0;                 // multiplicity of (s - r) in the reduced denominator
    Rational leading_coefficient;  // lim_{s->r} (s-r)^order * F(s)
};

PoleData ratfun_pole_data(const RatFun& f, const Rational& r);

} // namespace smc
