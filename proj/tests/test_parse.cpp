#include "doctest.h"

#include <random>

#include "smc/error.hpp"
#include "smc/parse.hpp"

using namespace smc;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

ExpVec e3(int a, int b, int c) { return ExpVec{a, b, c}; }

std::mt19937 rng(99);

MultiPoly random_poly3() {
    std::uniform_int_distribution<int> nterms(1, 6), e(0, 4);
    std::uniform_int_distribution<long> num(-7, 7), den(1, 4);
    MultiPoly p(3);
    for (int i = 0, k = nterms(rng); i < k; ++i)
        p.add_term(e3(e(rng), e(rng), e(rng)), Rational(num(rng), den(rng)));
    if (p.is_zero()) p.add_term(e3(1, 0, 0), q(1));
    return p;
}

} // namespace

TEST_CASE("parse paper-style inputs") {
    auto in = parse_poly("y^5 - x^3*z^2");
    CHECK(in.poly.term_count() == 2);
    CHECK(in.poly.coeff(e3(0, 5, 0)) == q(1));
    CHECK(in.poly.coeff(e3(3, 0, 2)) == q(-1));
    CHECK(homogeneity(in.poly) == 5);

    auto prod = parse_poly("x*y*z*(y^3 - x^2*z)");
    CHECK(prod.poly.term_count() == 2);
    CHECK(prod.poly.coeff(e3(1, 4, 1)) == q(1));
    CHECK(prod.poly.coeff(e3(3, 1, 2)) == q(-1));
    CHECK(homogeneity(prod.poly) == 6);

    CHECK_THROWS_AS(parse_poly("0"), Error);
    CHECK_THROWS_AS(parse_poly("x - x"), Error);
}

TEST_CASE("parse coefficients, powers of parentheses, implicit products") {
    auto p = parse_poly("3/2*x^2*y - z^3 + 2x");
    CHECK(p.poly.coeff(e3(2, 1, 0)) == q(3, 2));
    CHECK(p.poly.coeff(e3(0, 0, 3)) == q(-1));
    CHECK(p.poly.coeff(e3(1, 0, 0)) == q(2));

    auto sq = parse_poly("(y^2 + x*z)^3");
    CHECK(homogeneity(sq.poly) == 6);
    CHECK(sq.poly.coeff(e3(0, 6, 0)) == q(1));
    CHECK(sq.poly.coeff(e3(1, 4, 1)) == q(3));

    auto juxt = parse_poly("x(y^2 - 2xz)(y^2 - 4xz)");
    CHECK(juxt.poly.coeff(e3(1, 4, 0)) == q(1));
    CHECK(juxt.poly.coeff(e3(3, 0, 2)) == q(8));
    CHECK(juxt.poly.coeff(e3(2, 2, 1)) == q(-6));
}

TEST_CASE("parse errors carry position and kind") {
    try {
        parse_poly("x + @");
        FAIL("expected SyntaxError");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::SyntaxError);
        CHECK(err.position() == 4);
    }
    try {
        parse_poly("x + w^2");
        FAIL("expected UnknownVariable");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::UnknownVariable);
    }
    CHECK_THROWS_AS(parse_poly("x^0"), Error);
    CHECK_THROWS_AS(parse_poly("(x"), Error);
}

TEST_CASE("n-variable mode") {
    auto vars = default_variables(4);
    auto p = parse_poly("x1*x4 - x2*x3", vars);
    CHECK(p.poly.nvars() == 4);
    CHECK(p.poly.coeff({1, 0, 0, 1}) == q(1));
    CHECK(homogeneity(p.poly) == 2);
}

TEST_CASE("print/parse round trip on random polynomials") {
    auto vars = default_variables();
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly p = random_poly3();
        std::string s = print_poly(p, vars);
        CHECK(parse_poly(s, vars).poly == p);
    }
}

TEST_CASE("homogeneity") {
    CHECK(homogeneity(parse_poly("x^2*y + z^3").poly) == 3);
    CHECK(homogeneity(parse_poly("x^2 + x").poly) == std::nullopt);
    // two conics, expanded
    auto tc = parse_poly("(y*z - x^2)*(y*z - x^2 + y^2)");
    CHECK(homogeneity(tc.poly) == 4);
    // multiplicativity
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly a = random_poly3(), b = random_poly3();
        auto ha = homogeneity(a), hb = homogeneity(b);
        if (ha && hb) CHECK(homogeneity(a * b) == *ha + *hb);
    }
}

TEST_CASE("support") {
    auto f = parse_poly("y^5 + x^3*z^2");
    std::set<ExpVec> want{e3(0, 5, 0), e3(3, 0, 2)};
    CHECK(support(f.poly) == want);
    CHECK(support(parse_poly("x*y*z").poly) == std::set<ExpVec>{e3(1, 1, 1)});
}
