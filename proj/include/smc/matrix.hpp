#pragma once

#include <utility>
#include <vector>

#include "smc/unipoly.hpp"

namespace smc {

// Square matrix over Q.
class RatMatrix {
public:
    RatMatrix() : n_(0) {}
    explicit RatMatrix(int n) : n_(n), a_(n * n, Rational(0)) {}
    RatMatrix(int n, std::vector<Rational> entries);

    static RatMatrix identity(int n);
    static RatMatrix diagonal(const std::vector<Rational>& d);

    int size() const { return n_; }
    Rational& at(int r, int c) { return a_[r * n_ + c]; }
    const Rational& at(int r, int c) const { return a_[r * n_ + c]; }
    const std::vector<Rational>& entries() const { return a_; }

    bool is_zero() const;
    Rational trace() const;

    RatMatrix operator-() const;
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    RatMatrix operator*(const Rational& s) const;
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    RatMatrix pow(int e) const;
    // Gauss-Jordan inverse; throws on singular input.
    RatMatrix inverse() const;

private:
    int n_;
    std::vector<Rational> a_; // row-major
};

UniPoly characteristic_polynomial(const RatMatrix& a); // monic
UniPoly minimal_polynomial(const RatMatrix& a);        // monic least-degree annihilator
RatMatrix poly_eval(const UniPoly& p, const RatMatrix& a);

// Semi-simple + nilpotent split: A = S + N with SN = NS, S a rational
// polynomial in A. Newton iteration on the squarefree part of the
// characteristic polynomial, entirely within Q.
std::pair<RatMatrix, RatMatrix> jordan_chevalley(const RatMatrix& a);

bool is_semisimple(const RatMatrix& a);
bool is_nilpotent(const RatMatrix& a);

// --- dense exact linear algebra on rectangular rational matrices ---

using RatRow = std::vector<Rational>;

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(std::vector<RatRow>& rows);

// Canonical basis (RREF rows) of {x : M x = 0}, M given by rows of width ncols.
std::vector<RatRow> nullspace(const std::vector<RatRow>& rows, int ncols);

// Membership of v in the row span of an RREF basis.
bool in_row_span(const std::vector<RatRow>& rref_basis, const RatRow& v);

} // namespace smc
