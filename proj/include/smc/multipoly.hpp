#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "smc/rational.hpp"

namespace smc {

using ExpVec = std::vector<int>;

// Graded-lex: compare by total degree, then lexicographically.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Q; no zero coefficients are stored and
// all exponent vectors share the same length.
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : n_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, const Rational& a);
    static MultiPoly monomial(ExpVec e, const Rational& a);
    static MultiPoly variable(int nvars, int index);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rational, GradedLexLess>& terms() const { return terms_; }

    Rational coeff(const ExpVec& e) const;
    void add_term(const ExpVec& e, const Rational& a);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const Rational& s) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(int e) const;
    MultiPoly derivative(int var) const;

    int total_degree() const; // -1 for zero
    // Degree d when every exponent vector sums to d, nullopt otherwise.
    std::optional<int> homogeneity() const;
    std::set<ExpVec> support() const;

    // Componentwise minimum exponent over the support (zero polynomial -> zeros).
    ExpVec min_exponents() const;
    MultiPoly divide_by_monomial(const ExpVec& e) const;

    // Result exponent vector: out[i] = in[perm[i]].
    MultiPoly permute_variables(const std::vector<int>& perm) const;

private:
    int n_;
    std::map<ExpVec, Rational, GradedLexLess> terms_;
};

} // namespace smc
