#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smc/bipoly.hpp"
#include "smc/ratfun.hpp"
#include "smc/resolution.hpp"

namespace smc {

// Z(s) for the projectivized configuration: the bracketed strata sum divided
// by (3 + d s). Divisor components are the nodes with N >= 1; lines with
// N = 0 belong to the configuration but do not puncture strata.
RatFun topological_zeta(const ResolutionGraph& g);

// Same function through the contracted-chain formula; needs a1*a2*a3 != 0.
RatFun topological_zeta_compact(const StandardFormData& sf);

// One summand of the bracketed motivic sum: class [E_I] and the (nu, N)
// pairs of the components in I.
struct MotivicTerm {
    BiPoly cls;
    std::vector<std::pair<long, long>> factors;
};

std::vector<MotivicTerm> motivic_strata_terms(const ResolutionGraph& g);

// Exact rational expression in (L, T) with T standing for L^{-s}:
//   global: L^{-3} (L-1) L^{3+ds} / (L^{3+ds}-1) * [strata sum]
//   local:  the same without the L^{3+ds} factor
BiRatFun motivic_zeta_expression(const ResolutionGraph& g, bool local = false);

// Normal crossing configuration decorated for the residue expression.
struct DecoratedConfig {
    struct CfgNode {
        int id = -1;
        Rational beta;
        std::optional<long> kappa;
    };
    std::vector<CfgNode> nodes;
    std::set<std::pair<int, int>> edges;
    int n_exceptional = 0; // [surface] = L^2 + (1 + n_exceptional) L + 1

    std::vector<int> neighbors(int id) const;
};

// beta = alpha for every configuration curve (value 1 on N = 0 lines).
DecoratedConfig decorated_config(const ResolutionGraph& g);

// Rational function in M = L^(1/d); exponents d*beta_i must be integral.
struct ResidueExpr {
    int d = 1;
    RatFun value; // in the variable M
    bool is_zero() const { return value.is_zero(); }
};

// The residue expression: strata over nonzero decorations plus the kappa
// terms of the zero-decorated curves. Throws NotAllowed when a zero-
// decorated curve is not 2-valent with opposite nonzero neighbor values.
ResidueExpr motivic_residue(const DecoratedConfig& cfg, int d);

// Euler specialization of the same expression, computed independently from
// the chi-level data: (L-1)/(L^b - 1) -> 1/b.
Rational residue_euler_specialization(const DecoratedConfig& cfg);

struct PoleRow {
    Rational pole;
    int candidate_order = 0;
    int actual_order = 0;
    std::string note;
};

// Candidates are -3/d and every -nu_j/N_j; actual order at -3/d is decided
// by the residue, elsewhere by the reduced topological function (a lower
// bound for the motivic order).
std::vector<PoleRow> candidate_and_actual_poles(const ResolutionGraph& g);

} // namespace smc
