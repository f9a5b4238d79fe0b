#include "smc/standardform.hpp"

#include <algorithm>
#include <numeric>

#include "smc/error.hpp"
#include "smc/logder.hpp"
#include "smc/unipoly.hpp"

namespace smc {

LatticePoint phi_map(int d, const ExpVec& e) {
    if (e.size() != 3) fail(ErrorKind::BadParameters, "phi_map needs 3 variables");
    if (e[0] + e[1] + e[2] != d) fail(ErrorKind::NotDegreeD, "exponent vector does not sum to d");
    return LatticePoint{-(long)e[1], (long)(d - e[0])};
}

std::optional<SupportLine> support_line(const MultiPoly& f) {
    auto dh = f.homogeneity();
    if (!dh) fail(ErrorKind::NotHomogeneous, "support_line needs a homogeneous polynomial");
    int d = *dh;
    std::vector<LatticePoint> pts;
    for (const auto& e : f.support()) pts.push_back(phi_map(d, e));
    SupportLine line;
    line.base = pts[0];
    if (pts.size() == 1) {
        line.is_point = true;
        return line;
    }
    // normal of the line through the first two (distinct) points
    LatticePoint p = pts[0], q = pts[1];
    long A = q.v - p.v, B = -(q.u - p.u);
    long g = gcd_long(A, B);
    A /= g;
    B /= g;
    if (A < 0 || (A == 0 && B < 0)) { A = -A; B = -B; }
    long C = A * p.u + B * p.v;
    for (const auto& r : pts)
        if (A * r.u + B * r.v != C) return std::nullopt;
    line.A = A;
    line.B = B;
    line.C = C;
    return line;
}

const std::array<std::array<int, 3>, 6> kVariablePermutations = {{
    {0, 1, 2}, // identity
    {1, 0, 2}, // swap x,y
    {2, 1, 0}, // swap x,z
    {0, 2, 1}, // swap y,z
    {1, 2, 0}, // 3-cycle
    {2, 0, 1}, // 3-cycle
}};

int StandardFormData::b_total() const {
    return std::accumulate(b.begin(), b.end(), 0);
}

bool StandardFormData::reduced() const {
    if (a1 > 1 || a2 > 1 || a3 > 1) return false;
    return std::all_of(b.begin(), b.end(), [](int x) { return x == 1; });
}

namespace {

std::array<int, 3> inverse_permutation(const std::array<int, 3>& p) {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[p[i]] = i;
    return inv;
}

// Attempt extraction in the current coordinates on the stripped part h.
// Fails (returns false) when the support does not sit on a standard segment.
bool try_extract(const MultiPoly& h, StandardFormData& sf) {
    int D = *h.homogeneity();
    // endpoints: the pure y power and the unique y-free point
    ExpVec p0{0, D, 0};
    if (h.coeff(p0).is_zero()) return false;
    std::optional<ExpVec> p1;
    for (const auto& [e, a] : h.terms()) {
        if (e[1] != 0) continue;
        if (p1) return false;
        p1 = e;
    }
    if (!p1) return false;
    long X = (*p1)[0], Dy = D;
    long g = gcd_long(X, Dy);
    long t = Dy / g, u = X / g, B = g;
    if (u >= t) return false;
    // every support point must be (q*u, (B-q)*t, q*(t-u)) with 0 <= q <= B
    std::vector<Rational> shadow((size_t)B + 1, Rational(0));
    for (const auto& [e, a] : h.terms()) {
        if (e[1] % t != 0) return false;
        long q = B - e[1] / t;
        if (q < 0 || q > B) return false;
        if (e[0] != q * u || e[2] != q * (t - u)) return false;
        shadow[(size_t)q] = a;
    }
    UniPoly P{std::move(shadow)};
    if (P.degree() != (int)B) fail(ErrorKind::InternalInconsistency, "shadow lost its endpoint");

    sf.t = (int)t;
    sf.u = (int)u;
    sf.lambda = P.coeff(0); // coefficient of the pure y power

    auto factors = squarefree_decomposition(P);
    sf.m = 0;
    std::vector<std::pair<Rational, int>> paired; // (c value, multiplicity)
    std::vector<int> b_only;
    bool all_split = true;
    for (const auto& [F, mult] : factors) {
        sf.m += F.degree();
        for (int i = 0; i < F.degree(); ++i) b_only.push_back(mult);
        auto roots = rational_roots(F);
        if ((int)roots.size() == F.degree()) {
            // factor 1 + cY has root -1/c
            for (const auto& [rho, rm] : roots) paired.emplace_back(-rho.inverse(), mult);
        } else {
            all_split = false;
        }
    }
    if (all_split) {
        std::sort(paired.begin(), paired.end(), [](const auto& x, const auto& y) {
            if (x.second != y.second) return x.second < y.second;
            return x.first < y.first;
        });
        sf.b.clear();
        std::vector<Rational> cs;
        for (const auto& [cv, mult] : paired) {
            sf.b.push_back(mult);
            cs.push_back(cv);
        }
        sf.c = std::move(cs);
    } else {
        sf.c.reset();
        std::sort(b_only.begin(), b_only.end());
        sf.b = std::move(b_only);
    }
    return true;
}

} // namespace

StandardFormData extract_standard_form(const MultiPoly& f) {
    if (f.nvars() != 3) fail(ErrorKind::BadParameters, "standard form extraction needs 3 variables");
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "standard form of zero polynomial");
    auto dh = f.homogeneity();
    if (!dh) fail(ErrorKind::NotHomogeneous, "standard form needs a homogeneous polynomial");

    for (int pi = 0; pi < 6; ++pi) {
        std::vector<int> perm(kVariablePermutations[pi].begin(), kVariablePermutations[pi].end());
        MultiPoly fp = f.permute_variables(perm);
        ExpVec mins = fp.min_exponents();
        MultiPoly h = fp.divide_by_monomial(mins);

        StandardFormData sf;
        sf.a1 = mins[0];
        sf.a2 = mins[1];
        sf.a3 = mins[2];
        sf.d = *dh;
        sf.permutation_applied = pi;

        if (h.is_monomial()) {
            // pure monomial input
            sf.t = 1;
            sf.u = 0;
            sf.m = 0;
            sf.c = std::vector<Rational>{};
            sf.lambda = h.terms().begin()->second;
            return sf;
        }
        if (try_extract(h, sf)) return sf;
    }
    fail(ErrorKind::NotStandardForm, "support does not lie on a standard segment in any permutation");
}

MultiPoly standard_form_polynomial(const StandardFormData& sf) {
    if (!sf.c)
        fail(ErrorKind::BadParameters, "cannot rebuild a polynomial without branch coefficients");
    if (sf.c->size() != sf.b.size())
        fail(ErrorKind::BadParameters, "coefficient/multiplicity length mismatch");
    MultiPoly p = MultiPoly::monomial(ExpVec{sf.a1, sf.a2, sf.a3}, sf.lambda);
    for (size_t i = 0; i < sf.b.size(); ++i) {
        MultiPoly factor = MultiPoly::monomial(ExpVec{0, sf.t, 0}, Rational(1)) +
                           MultiPoly::monomial(ExpVec{sf.u, 0, sf.t - sf.u}, (*sf.c)[i]);
        p *= factor.pow(sf.b[i]);
    }
    auto inv = inverse_permutation(kVariablePermutations[sf.permutation_applied]);
    return p.permute_variables(std::vector<int>(inv.begin(), inv.end()));
}

StandardFormData with_standin_coefficients(const StandardFormData& sf) {
    StandardFormData out = sf;
    if (!out.c) {
        std::vector<Rational> cs;
        for (size_t i = 0; i < out.b.size(); ++i) cs.emplace_back((long)i + 2); // c_q = q+1
        out.c = std::move(cs);
    }
    return out;
}

bool nontraceless_condition(const StandardFormData& sf) {
    long d = sf.d, t = sf.t, u = sf.u;
    return u * (d - 3 * sf.a3) != (t - u) * (d - 3 * sf.a1);
}

const char* class_tag_name(ClassTag t) {
    switch (t) {
        case ClassTag::Cone: return "Cone";
        case ClassTag::NormalCrossingMonomialLike: return "NormalCrossingMonomialLike";
        case ClassTag::DecomposableArrangement: return "DecomposableArrangement";
        case ClassTag::StandardForm: return "StandardForm";
        case ClassTag::NoDiagonalSymmetry: return "NoDiagonalSymmetry";
    }
    return "?";
}

Classification classify(const MultiPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "classify zero polynomial");
    if (!f.homogeneity()) fail(ErrorKind::NotHomogeneous, "classify needs a homogeneous polynomial");
    Classification out{ClassTag::NoDiagonalSymmetry, std::nullopt, false};
    if (f.is_monomial()) {
        out.tag = ClassTag::NormalCrossingMonomialLike;
        return out;
    }
    try {
        StandardFormData sf = extract_standard_form(f);
        out.sf = sf;
        if (sf.u == 0) {
            out.tag = ClassTag::DecomposableArrangement;
            return out;
        }
        out.tag = ClassTag::StandardForm;
        out.nontraceless = nontraceless_condition(sf);
        // cross-check against the derivation-space route when computable
        if (!is_cone(f)) {
            bool witness = find_semisimple_nontraceless(f).has_value();
            if (witness != out.nontraceless)
                fail(ErrorKind::InternalInconsistency,
                     "non-traceless condition disagrees with the derivation-space witness");
        }
        return out;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotStandardForm) throw;
    }
    if (is_cone(f)) {
        out.tag = ClassTag::Cone;
        return out;
    }
    return out;
}

int euler_characteristic(const StandardFormData& sf) {
    if (sf.u == 0) fail(ErrorKind::HyperplaneArrangement, "Euler characteristic case needs u >= 1");
    return (sf.a1 == 0 && sf.a2 == 0) ? 2 : 3;
}

int euler_characteristic_by_fixed_points(const StandardFormData& sf) {
    if (sf.u == 0) fail(ErrorKind::HyperplaneArrangement, "Euler characteristic case needs u >= 1");
    // [1:0:0] and [0:0:1] always lie on the branch curves; [0:1:0] lies on
    // the reduced divisor iff the x line or the z line is present
    return (sf.a1 == 0 && sf.a3 == 0) ? 2 : 3;
}

} // namespace smc
