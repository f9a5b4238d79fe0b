#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smc/rational.hpp"
#include "smc/standardform.hpp"

namespace smc {

using Ray = std::pair<long, long>; // primitive lattice direction (p, q)

// Interior rays of the minimal regular subdivision of cone(v, w), in order
// from v to w; empty when |det(v, w)| = 1. Computed by the unimodular
// successor walk along the boundary of the lattice hull.
std::vector<Ray> hj_rays(Ray v, Ray w);

enum class NodeKind { Exceptional, StrictLine, StrictBranch };

struct ResNode {
    int id = -1;
    NodeKind kind = NodeKind::Exceptional;
    int line_index = -1;    // 0,1,2 for the x,y,z lines
    int branch_index = -1;  // branch number for strict branches
    long N = 0;             // multiplicity in the pullback divisor
    long nu = 1;            // discrepancy + 1
    std::optional<Ray> ray; // for exceptional nodes
    int anchor = -1;        // 0: chain over [0:0:1], 1: chain over [1:0:0]
    std::optional<long> kappa; // minus the self-intersection
};

struct ResolutionGraph {
    std::vector<ResNode> nodes;
    std::set<std::pair<int, int>> edges; // normalized id pairs (lo, hi)
    int d = 0;
    int n_exceptional = 0;
    int e_id = -1;        // the node E carrying ray (t, u)
    int eprime_id = -1;   // the node E' carrying ray (t, t-u)
    std::array<int, 3> line_ids{-1, -1, -1};

    const ResNode& node(int id) const { return nodes[id]; }
    bool adjacent(int i, int j) const;
    std::vector<int> neighbors(int id) const;
    void add_edge(int i, int j);
};

// Decorated dual graph of the embedded resolution of the standard-form
// configuration (the three coordinate lines plus all branch curves).
// Requires u >= 1.
ResolutionGraph build_resolution_graph(const StandardFormData& sf);

using AlphaMap = std::map<int, Rational>;

// alpha_j = nu_j - (3/d) N_j for every node.
AlphaMap alpha_terms(const ResolutionGraph& g);

struct GraphCheckReport {
    bool all_pass = true;
    std::vector<std::string> failures;
    void check(bool ok, const std::string& what);
};

// Load and adjunction identities, the no-adjacent-vanishing-alpha condition,
// alpha_E + alpha_E' = 0, and the Euler-characteristic bookkeeping.
GraphCheckReport verify_graph_identities(const ResolutionGraph& g);

// Minimal embedded resolution of the union of two conics meeting at a
// single point (degree 4).
ResolutionGraph two_conics_fixture();

std::string graph_to_dot(const ResolutionGraph& g);

} // namespace smc
