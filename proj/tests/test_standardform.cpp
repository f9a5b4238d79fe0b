#include "doctest.h"

#include <algorithm>
#include <random>

#include "smc/error.hpp"
#include "smc/logder.hpp"
#include "smc/parse.hpp"
#include "smc/standardform.hpp"

using namespace smc;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

MultiPoly poly(const std::string& s) { return parse_poly(s).poly; }

} // namespace

TEST_CASE("phi map") {
    CHECK(phi_map(5, {0, 5, 0}) == LatticePoint{-5, 5});   // A_d corner
    CHECK(phi_map(5, {2, 0, 3}) == LatticePoint{0, 3});    // alpha_{d,r}
    CHECK(phi_map(3, {1, 1, 1}) == LatticePoint{-1, 2});
    CHECK_THROWS_AS(phi_map(4, {1, 1, 1}), Error);
}

TEST_CASE("support line") {
    // two points are always collinear
    auto l = support_line(poly("y^5 - x^3*z^2"));
    REQUIRE(l.has_value());
    CHECK(!l->is_point);
    // mapped support: (0,5,0) -> (-5,5) and (3,0,2) -> (0,2)
    CHECK(l->A * -5 + l->B * 5 == l->C);
    CHECK(l->A * 0 + l->B * 2 == l->C);

    CHECK(!support_line(poly("x^3 + y^3 + z^3")).has_value());

    auto pt = support_line(poly("x^2*y*z"));
    REQUIRE(pt.has_value());
    CHECK(pt->is_point);
}

TEST_CASE("support line iff diagonal derivation") {
    std::mt19937 rng(2025);
    std::uniform_int_distribution<int> deg(2, 7), nterms(1, 5);
    int count = 0;
    while (count < 100) {
        int d = deg(rng);
        auto mons = monomials_of_degree(3, d);
        std::uniform_int_distribution<size_t> pick(0, mons.size() - 1);
        MultiPoly f(3);
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) f.add_term(mons[pick(rng)], q(1));
        if (f.is_zero()) continue;
        ++count;
        bool line = support_line(f).has_value();
        bool diag = !find_diagonal(f).empty();
        CHECK(line == diag);
    }
}

TEST_CASE("extract: weighted quintic") {
    auto sf = extract_standard_form(poly("y^5 - x^3*z^2"));
    CHECK(sf.a1 == 0);
    CHECK(sf.a2 == 0);
    CHECK(sf.a3 == 0);
    CHECK(sf.t == 5);
    CHECK(sf.u == 3);
    CHECK(sf.m == 1);
    CHECK(sf.b == std::vector<int>{1});
    REQUIRE(sf.c.has_value());
    CHECK(*sf.c == std::vector<Rational>{q(-1)});
    CHECK(sf.d == 5);
    CHECK(sf.permutation_applied == 0);
}

TEST_CASE("extract: xyz times cuspidal quartic") {
    auto sf = extract_standard_form(poly("x*y*z*(y^3 - x^2*z)"));
    CHECK(sf.a1 == 1);
    CHECK(sf.a2 == 1);
    CHECK(sf.a3 == 1);
    CHECK(sf.t == 3);
    CHECK(sf.u == 2);
    CHECK(sf.m == 1);
    CHECK(sf.b == std::vector<int>{1});
    REQUIRE(sf.c.has_value());
    CHECK(*sf.c == std::vector<Rational>{q(-1)});
    CHECK(sf.d == 6);
}

TEST_CASE("extract: two rational branches") {
    auto sf = extract_standard_form(poly("x*(y^2 - 2*x*z)*(y^2 - 4*x*z)"));
    CHECK(sf.a1 == 1);
    CHECK(sf.a2 == 0);
    CHECK(sf.a3 == 0);
    CHECK(sf.t == 2);
    CHECK(sf.u == 1);
    CHECK(sf.m == 2);
    CHECK(sf.b == std::vector<int>{1, 1});
    REQUIRE(sf.c.has_value());
    CHECK(*sf.c == std::vector<Rational>{q(-4), q(-2)});
    CHECK(sf.d == 5);
}

TEST_CASE("extract: h family with gcd(d, r) = m branches") {
    // support on the segment from (0,d,0) to (r,0,d-r): m = gcd(d,r),
    // t = d/m, u = r/m
    auto f = poly("(y^3 + x^2*z)*(y^3 - 5*x^2*z)"); // d = 6, r = 4, m = 2
    auto sf = extract_standard_form(f);
    CHECK(sf.t == 3);
    CHECK(sf.u == 2);
    CHECK(sf.m == 2);
    CHECK(sf.b == std::vector<int>{1, 1});

    auto g = poly("y^6 + x^4*z^2 + x^2*y^3*z"); // same segment, generic shadow
    auto sg = extract_standard_form(g);
    CHECK(sg.t == 3);
    CHECK(sg.u == 2);
    CHECK(sg.m == 2);
}

TEST_CASE("extract respects multiplicities") {
    auto sf = extract_standard_form(poly("x^2*(y^2 + x*z)^3*(y^2 + 5*x*z)"));
    CHECK(sf.a1 == 2);
    CHECK(sf.t == 2);
    CHECK(sf.u == 1);
    CHECK(sf.m == 2);
    CHECK(sf.b == std::vector<int>{1, 3});
    REQUIRE(sf.c.has_value());
    CHECK((*sf.c)[0] == q(5)); // multiplicity-1 branch first
    CHECK((*sf.c)[1] == q(1));
}

TEST_CASE("extract without rational branch coefficients") {
    // shadow 1 + Y^3 has one rational root and an irreducible quadratic
    auto sf = extract_standard_form(poly("y^6 + x^3*z^3"));
    CHECK(sf.t == 2);
    CHECK(sf.u == 1);
    CHECK(sf.m == 3);
    CHECK(sf.b == std::vector<int>{1, 1, 1});
    CHECK(!sf.c.has_value());
}

TEST_CASE("extract needs a permutation for some inputs") {
    // x^5 - y^3 z^2 is the weighted quintic with x and y swapped
    auto sf = extract_standard_form(poly("x^5 - y^3*z^2"));
    CHECK(sf.t == 5);
    CHECK(sf.u == 3);
    CHECK(sf.permutation_applied == 1);
}

TEST_CASE("extract: monomial and failures") {
    auto sf = extract_standard_form(poly("x^2*y*z^3"));
    CHECK(sf.m == 0);
    CHECK(sf.d == 6);
    CHECK(sf.b.empty());
    CHECK_THROWS_AS(extract_standard_form(poly("x^3 + y^3 + z^3")), Error);
    CHECK_THROWS_AS(extract_standard_form(poly("x^2 + y")), Error);
}

TEST_CASE("round trip build -> extract") {
    StandardFormData sf;
    sf.a1 = 1; sf.a2 = 0; sf.a3 = 2;
    sf.t = 3; sf.u = 1;
    sf.m = 2;
    sf.b = {1, 2};
    sf.c = std::vector<Rational>{q(5), q(-7, 3)};
    sf.d = 1 + 0 + 2 + 3 * 3;
    sf.permutation_applied = 0;
    MultiPoly f = standard_form_polynomial(sf);
    auto back = extract_standard_form(f);
    CHECK(back.a1 == sf.a1);
    CHECK(back.a2 == sf.a2);
    CHECK(back.a3 == sf.a3);
    CHECK(back.t == sf.t);
    CHECK(back.u == sf.u);
    CHECK(back.m == sf.m);
    CHECK(back.b == sf.b);
    REQUIRE(back.c.has_value());
    CHECK(*back.c == *sf.c);
    CHECK(standard_form_polynomial(back) == f);
}

TEST_CASE("round trip across permutations and invariants") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> tdist(2, 6), adist(0, 2), mdist(1, 2), bdist(1, 2),
        cdist(1, 9), pdist(0, 5);
    for (int trial = 0; trial < 40; ++trial) {
        StandardFormData sf;
        sf.t = tdist(rng);
        std::vector<int> us;
        for (int u = 1; u < sf.t; ++u)
            if (gcd_long(u, sf.t) == 1) us.push_back(u);
        sf.u = us[rng() % us.size()];
        sf.a1 = adist(rng); sf.a2 = adist(rng); sf.a3 = adist(rng);
        sf.m = mdist(rng);
        std::vector<Rational> cs;
        for (int i = 0; i < sf.m; ++i) {
            sf.b.push_back(bdist(rng));
            cs.emplace_back(cdist(rng) + i * 10); // distinct
        }
        sf.c = cs;
        sf.d = sf.a1 + sf.a2 + sf.a3 + sf.t * sf.b_total();
        sf.permutation_applied = pdist(rng);
        MultiPoly f = standard_form_polynomial(sf);
        auto back = extract_standard_form(f);
        CHECK(back.d == sf.a1 + sf.a2 + sf.a3 + sf.t * sf.b_total());
        CHECK(back.t == sf.t);
        // first-permutation-wins may pick the mirrored presentation x <-> z
        CHECK((back.u == sf.u || back.u == sf.t - sf.u));
        CHECK(back.m == sf.m);
        std::vector<int> want_b = sf.b;
        std::sort(want_b.begin(), want_b.end());
        CHECK(back.b == want_b);
        if (back.u != 0) CHECK(gcd_long(back.t, back.u) == 1);
        CHECK(back.d == back.a1 + back.a2 + back.a3 + back.t * back.b_total());
        // the extracted data reconstructs the input exactly
        CHECK(standard_form_polynomial(back) == f);
    }
}

TEST_CASE("nontraceless condition") {
    StandardFormData sf;
    sf.t = 5; sf.u = 3; sf.a1 = sf.a2 = sf.a3 = 0; sf.d = 5;
    CHECK(nontraceless_condition(sf)); // 3*5 != 2*5

    // t = 2, u = 1: equivalent to a1 != a3
    StandardFormData conic;
    conic.t = 2; conic.u = 1; conic.m = 1; conic.b = {1};
    conic.a1 = 1; conic.a3 = 1; conic.a2 = 0;
    conic.d = 4;
    CHECK(!nontraceless_condition(conic));
    conic.a1 = 2; conic.d = 5;
    CHECK(nontraceless_condition(conic));

    // t = 2u with no lines: always traceless
    StandardFormData bare;
    bare.t = 2; bare.u = 1; bare.m = 1; bare.b = {1};
    bare.a1 = bare.a2 = bare.a3 = 0;
    bare.d = 2;
    CHECK(!nontraceless_condition(bare));
}

TEST_CASE("classify") {
    CHECK(classify(poly("x^2*y*z")).tag == ClassTag::NormalCrossingMonomialLike);
    auto st = classify(poly("y^5 - x^3*z^2"));
    CHECK(st.tag == ClassTag::StandardForm);
    CHECK(st.nontraceless);
    CHECK(classify(poly("x*y*(x + y)")).tag == ClassTag::DecomposableArrangement);
    CHECK(classify(poly("x^3 + y^3 + z^3")).tag == ClassTag::NoDiagonalSymmetry);
    // cone hidden from the 6 permutations: a function of x+y and z
    CHECK(classify(poly("(x+y)^2*z + z^3")).tag == ClassTag::Cone);
    auto conic = classify(poly("y^2 + x*z"));
    CHECK(conic.tag == ClassTag::StandardForm);
    CHECK(!conic.nontraceless);
}

TEST_CASE("euler characteristic case split") {
    StandardFormData sf;
    sf.t = 3; sf.u = 1; sf.m = 1; sf.b = {1};
    sf.a1 = 0; sf.a2 = 0; sf.a3 = 0; sf.d = 3;
    CHECK(euler_characteristic(sf) == 2);
    CHECK(euler_characteristic_by_fixed_points(sf) == 2);

    sf.a1 = 1; sf.a2 = 1; sf.a3 = 1; sf.d = 6;
    CHECK(euler_characteristic(sf) == 3);
    CHECK(euler_characteristic_by_fixed_points(sf) == 3);

    sf.a1 = 0; sf.a2 = 0; sf.a3 = 5; sf.d = 8;
    CHECK(euler_characteristic(sf) == 2); // verbatim case split
    CHECK(euler_characteristic_by_fixed_points(sf) == 3); // flagged disagreement

    StandardFormData arr;
    arr.t = 1; arr.u = 0; arr.m = 2; arr.b = {1, 1}; arr.d = 2;
    CHECK_THROWS_AS(euler_characteristic(arr), Error);
}
