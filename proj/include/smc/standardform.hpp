#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "smc/multipoly.hpp"

namespace smc {

struct LatticePoint {
    long u = 0, v = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// (e1,e2,e3) with e1+e2+e3 = d maps to (-e2, d-e1).
LatticePoint phi_map(int d, const ExpVec& e);

// Line A*u + B*v = C through the mapped support, primitive normal, or a
// degenerate single point.
struct SupportLine {
    bool is_point = false;
    LatticePoint base;    // a mapped support point
    long A = 0, B = 0, C = 0;
};

std::optional<SupportLine> support_line(const MultiPoly& f);

// the 6 variable permutations, new index -> old index:
// identity, the three swaps, then the two 3-cycles
extern const std::array<std::array<int, 3>, 6> kVariablePermutations;

struct StandardFormData {
    int a1 = 0, a2 = 0, a3 = 0;
    int t = 1, u = 0;
    int m = 0;
    std::vector<int> b;                          // multiplicities, size m
    std::optional<std::vector<Rational>> c;      // paired with b when the shadow splits over Q
    int d = 0;
    int permutation_applied = 0;                 // index into kVariablePermutations
    Rational lambda = Rational(1);               // overall scalar, not part of the serialized record

    int b_total() const;
    bool reduced() const; // all b_q = 1 and a_i <= 1
};

StandardFormData extract_standard_form(const MultiPoly& f);

// Reconstructs the polynomial in the original coordinates; requires c.
MultiPoly standard_form_polynomial(const StandardFormData& sf);

// Copy with distinct rational stand-ins c_q = q+1 when c is absent.
StandardFormData with_standin_coefficients(const StandardFormData& sf);

// u(d - 3 a3) != (t - u)(d - 3 a1)
bool nontraceless_condition(const StandardFormData& sf);

enum class ClassTag {
    Cone,
    NormalCrossingMonomialLike,
    DecomposableArrangement,
    StandardForm,
    NoDiagonalSymmetry,
};

const char* class_tag_name(ClassTag t);

struct Classification {
    ClassTag tag;
    std::optional<StandardFormData> sf;
    bool nontraceless = false;
};

Classification classify(const MultiPoly& f);

// Euler characteristic of the reduced divisor, u >= 1 only. The case split
// used here reads a1 = a2 = 0; the torus-fixed-point count distinguishes on
// a1 = a3 = 0 instead, so both are exposed and reports flag disagreement.
int euler_characteristic(const StandardFormData& sf);
int euler_characteristic_by_fixed_points(const StandardFormData& sf);

} // namespace smc
