#pragma once

#include <optional>
#include <vector>

#include "smc/matrix.hpp"
#include "smc/multipoly.hpp"

namespace smc {

enum class DerivationKind { Annihilating, Logarithmic };

// Space of degree-zero derivations of f, encoded as n x n matrices Q with
// delta = sum_{r,c} q_rc x_r d/dx_c. Basis is kept in reduced row echelon
// form over the n^2 matrix coordinates.
struct DerivationSpace {
    int n = 0;
    std::vector<RatMatrix> basis;
    DerivationKind kind = DerivationKind::Annihilating;

    int dimension() const { return (int)basis.size(); }
    bool contains(const RatMatrix& q) const;
};

struct WeightVector {
    std::vector<Rational> w;
    Rational w_degree;
};

// delta applied to f for delta = sum q_rc x_r d/dx_c.
MultiPoly apply_derivation(const RatMatrix& q, const MultiPoly& f);

// Basis of {Q : (x Q d/dx) . f = 0}; exact nullspace over the matrix entries.
DerivationSpace degree0_annihilating(const MultiPoly& f);

// Basis of {Q : (x Q d/dx) . f = lambda f}; equals the annihilating space
// plus the Euler direction (identity matrix).
DerivationSpace degree0_logarithmic(const MultiPoly& f);

int symmetry_dimension(const MultiPoly& f);

// True iff some nonzero constant-coefficient derivation kills f.
bool is_cone(const MultiPoly& f);

// Semi-simple element of the annihilating space with nonzero trace, when one
// exists. Returns nullopt iff the trace functional vanishes on the whole
// space. Throws ConeInput on cones.
std::optional<RatMatrix> find_semisimple_nontraceless(const MultiPoly& f);

// Basis of diagonal-derivation weight solutions {(w, lambda) : w.e = lambda
// on supp(f)} modulo the Euler solution (1,...,1; d). Empty means Euler only.
std::vector<WeightVector> find_diagonal(const MultiPoly& f);

// Span of the eigenspaces, over all generators, of the induced action on
// degree-p forms whose eigenvalue differs from -trace. Returned as an RREF
// basis of coefficient vectors over the graded-lex monomial list of R_p.
std::vector<RatRow> xi_space(const MultiPoly& f, int p, const std::vector<RatMatrix>& gens);

std::vector<ExpVec> monomials_of_degree(int nvars, int degree);

struct BetaResult {
    UniPoly beta;                  // product of (s + (p+n)/d) over deficient p
    std::vector<int> deficient_p;  // the p with Xi_p != R_p
    std::string divisibility_note;
};

BetaResult beta_polynomial(const MultiPoly& f, const std::vector<RatMatrix>& gens);

} // namespace smc
