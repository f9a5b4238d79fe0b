#include "smc/ratfun.hpp"

#include "smc/error.hpp"

namespace smc {

RatFun::RatFun(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::ZeroPolynomial, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Rational(1));
        return;
    }
    UniPoly g = unipoly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Rational lc = den_.leading();
    if (lc != Rational(1)) {
        Rational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) fail(ErrorKind::BadParameters, "division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFun::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) fail(ErrorKind::BadParameters, "rational function evaluated at a pole");
    return num_.eval(x) / d;
}

std::string RatFun::str(const std::string& var) const {
    if (is_zero()) return "0";
    if (den_.is_constant()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

PoleData ratfun_pole_data(const RatFun& f, const Rational& r) {
    PoleData pd;
    if (f.is_zero()) {
        pd.leading_coefficient = Rational(0);
        return pd;
    }
    pd.order = f.den().root_multiplicity(r);
    UniPoly den1 = f.den().deflate(r, pd.order);
    pd.leading_coefficient = f.num().eval(r) / den1.eval(r);
    return pd;
}

} // namespace smc
