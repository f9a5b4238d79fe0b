#include "smc/rational.hpp"

#include <ostream>

#include "smc/error.hpp"

namespace smc {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::NotDegreeD: return "NotDegreeD";
        case ErrorKind::ConeInput: return "ConeInput";
        case ErrorKind::NonRationalEigenvalues: return "NonRationalEigenvalues";
        case ErrorKind::NotInSpace: return "NotInSpace";
        case ErrorKind::NotStandardForm: return "NotStandardForm";
        case ErrorKind::HyperplaneArrangement: return "HyperplaneArrangement";
        case ErrorKind::DegenerateCone: return "DegenerateCone";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::InvalidGraph: return "InvalidGraph";
        case ErrorKind::NotAllowed: return "NotAllowed";
        case ErrorKind::NonIsolated: return "NonIsolated";
        case ErrorKind::NotWeightedHomogeneous: return "NotWeightedHomogeneous";
        case ErrorKind::BadParameters: return "BadParameters";
        case ErrorKind::Unsupported: return "Unsupported";
    }
    return "UnknownError";
}

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) fail(ErrorKind::BadParameters, "rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) fail(ErrorKind::BadParameters, "rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || s.empty())
        fail(ErrorKind::SyntaxError, "malformed rational '" + s + "'");
    if (q.get_den() == 0)
        fail(ErrorKind::BadParameters, "rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::BadParameters, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) fail(ErrorKind::BadParameters, "inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rational(n, d);
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        fail(ErrorKind::InternalInconsistency, "rational does not fit a long: " + str());
    return v_.get_num().get_si();
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace smc
