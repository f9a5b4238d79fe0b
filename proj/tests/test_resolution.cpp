#include "doctest.h"

#include <random>

#include "smc/error.hpp"
#include "smc/parse.hpp"
#include "smc/resolution.hpp"

using namespace smc;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

long det2(const Ray& a, const Ray& b) { return a.first * b.second - a.second * b.first; }

StandardFormData make_sf(int t, int u, std::vector<int> b, int a1, int a2, int a3) {
    StandardFormData sf;
    sf.t = t;
    sf.u = u;
    sf.b = std::move(b);
    sf.m = (int)sf.b.size();
    sf.a1 = a1;
    sf.a2 = a2;
    sf.a3 = a3;
    sf.d = a1 + a2 + a3 + t * sf.b_total();
    std::vector<Rational> cs;
    for (int i = 0; i < sf.m; ++i) cs.emplace_back(i + 2);
    sf.c = cs;
    return sf;
}

const ResNode* node_with_ray(const ResolutionGraph& g, int anchor, Ray r) {
    for (const auto& n : g.nodes)
        if (n.kind == NodeKind::Exceptional && n.anchor == anchor && n.ray == r) return &n;
    return nullptr;
}

} // namespace

TEST_CASE("hj_rays frozen examples") {
    CHECK(hj_rays({0, 1}, {3, 2}) == std::vector<Ray>{{1, 1}});
    CHECK(hj_rays({3, 2}, {1, 0}) == std::vector<Ray>{{2, 1}});
    CHECK(hj_rays({0, 1}, {5, 3}) == std::vector<Ray>{{1, 1}, {3, 2}});
    CHECK(hj_rays({1, 0}, {5, 3}) == std::vector<Ray>{{2, 1}});
    CHECK(hj_rays({1, 0}, {7, 1}).empty()); // determinant 1
    CHECK(hj_rays({1, 0}, {1, 5}) ==
          std::vector<Ray>{{1, 1}, {1, 2}, {1, 3}, {1, 4}});
    CHECK_THROWS_AS(hj_rays({2, 2}, {1, 0}), Error); // not primitive
    CHECK_THROWS_AS(hj_rays({1, 1}, {2, 2}), Error); // parallel
}

TEST_CASE("hj_rays hull oracle") {
    // oracle: the interior rays are exactly the primitive points on the
    // compact faces of the convex hull of the nonzero lattice points of the
    // cone. Equivalently: consecutive determinants are +-1 and dropping any
    // returned ray breaks unimodularity of its neighbor pair.
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> comp(0, 9);
    int done = 0;
    while (done < 200) {
        Ray v{comp(rng), comp(rng)}, w{comp(rng), comp(rng)};
        if (gcd_long(v.first, v.second) != 1 || gcd_long(w.first, w.second) != 1) continue;
        if (det2(v, w) == 0) continue;
        ++done;
        auto rays = hj_rays(v, w);
        long s = det2(v, w) > 0 ? 1 : -1;
        std::vector<Ray> full{v};
        for (auto& r : rays) full.push_back(r);
        full.push_back(w);
        for (size_t i = 0; i + 1 < full.size(); ++i)
            CHECK(s * det2(full[i], full[i + 1]) == 1);
        // minimality: dropping an interior ray leaves a non-regular pair
        for (size_t i = 1; i + 1 < full.size(); ++i)
            CHECK(s * det2(full[i - 1], full[i + 1]) > 1);
        // membership, primitivity
        for (const auto& r : rays) {
            CHECK(gcd_long(r.first, r.second) == 1);
            CHECK(s * det2(v, r) > 0);
            CHECK(s * det2(r, w) > 0);
        }
    }
}

TEST_CASE("resolution graph: weighted quintic") {
    // y^5 - x^3 z^2
    auto g = build_resolution_graph(extract_standard_form(parse_poly("y^5 - x^3*z^2").poly));
    CHECK(g.d == 5);
    CHECK(g.n_exceptional == 8);

    const ResNode& e = g.node(g.e_id);
    CHECK(e.N == 15);
    CHECK(e.nu == 8);
    CHECK(*e.kappa == 1);
    const ResNode& ep = g.node(g.eprime_id);
    CHECK(ep.N == 10);
    CHECK(ep.nu == 7);

    // the chain node (2,1) next to the x line has (N, nu) = (5, 3): nu/N = 3/5
    const ResNode* n21 = node_with_ray(g, 0, {2, 1});
    REQUIRE(n21 != nullptr);
    CHECK(n21->N == 5);
    CHECK(n21->nu == 3);
    CHECK(*n21->kappa == 3); // (1,0) + (5,3) = 3*(2,1)
    CHECK(g.adjacent(n21->id, g.line_ids[0]));
    CHECK(g.adjacent(n21->id, g.e_id));
    auto alpha = alpha_terms(g);
    CHECK(alpha[n21->id].is_zero());
    CHECK(alpha[g.line_ids[0]] == q(1)); // a1 = 0 line keeps alpha 1

    auto rep = verify_graph_identities(g);
    CHECK(rep.all_pass);
}

TEST_CASE("resolution graph: xyz times cuspidal quartic") {
    auto g = build_resolution_graph(extract_standard_form(parse_poly("x*y*z*(y^3 - x^2*z)").poly));
    CHECK(g.d == 6);
    const ResNode& e = g.node(g.e_id);
    CHECK(e.N == 11);
    CHECK(e.nu == 5);
    const ResNode& ep = g.node(g.eprime_id);
    CHECK(ep.N == 7);
    CHECK(ep.nu == 4);
    // two nodes with nu/N = 1/2 = 3/d
    auto alpha = alpha_terms(g);
    int zero_count = 0;
    for (const auto& n : g.nodes)
        if (alpha[n.id].is_zero()) ++zero_count;
    CHECK(zero_count == 2);
    const ResNode* a = node_with_ray(g, 0, {2, 1});
    const ResNode* b = node_with_ray(g, 0, {1, 1});
    REQUIRE(a);
    REQUIRE(b);
    CHECK(q(a->nu) == q(3, 6) * q(a->N));
    CHECK(q(b->nu) == q(3, 6) * q(b->N));
    // u = t-1 here, so E_z touches E'
    CHECK(g.adjacent(g.line_ids[2], g.eprime_id));
    CHECK(verify_graph_identities(g).all_pass);
}

TEST_CASE("resolution graph: u = 1 attaches E to the x line") {
    auto g = build_resolution_graph(make_sf(3, 1, {1}, 0, 0, 0));
    CHECK(g.adjacent(g.line_ids[0], g.e_id));
    CHECK(verify_graph_identities(g).all_pass);
}

TEST_CASE("resolution graph rejects hyperplane arrangements") {
    StandardFormData sf = make_sf(3, 2, {1}, 1, 1, 1);
    sf.u = 0;
    CHECK_THROWS_AS(build_resolution_graph(sf), Error);
}

TEST_CASE("branch nodes touch exactly E and E'") {
    auto g = build_resolution_graph(make_sf(5, 2, {1, 2, 3}, 1, 0, 2));
    int branches = 0;
    for (const auto& n : g.nodes) {
        if (n.kind != NodeKind::StrictBranch) continue;
        ++branches;
        auto nb = g.neighbors(n.id);
        REQUIRE(nb.size() == 2);
        CHECK(((nb[0] == g.e_id && nb[1] == g.eprime_id) ||
               (nb[1] == g.e_id && nb[0] == g.eprime_id)));
    }
    CHECK(branches == 3);
    CHECK(g.adjacent(g.line_ids[0], g.line_ids[2])); // [0:1:0] stays a crossing
    CHECK(verify_graph_identities(g).all_pass);
}

TEST_CASE("interior chain data positivity") {
    auto g = build_resolution_graph(make_sf(7, 4, {2}, 3, 1, 2));
    for (const auto& n : g.nodes) {
        if (n.kind == NodeKind::Exceptional) {
            CHECK(n.N >= 1);
            CHECK(n.nu >= 2);
        } else {
            CHECK(n.nu == 1);
        }
    }
    CHECK(verify_graph_identities(g).all_pass);
}

TEST_CASE("two-conics fixture") {
    auto g = two_conics_fixture();
    REQUIRE(g.nodes.size() == 6);
    CHECK(g.nodes[0].N == 2);
    CHECK(g.nodes[0].nu == 2);
    CHECK(g.nodes[1].N == 4);
    CHECK(g.nodes[1].nu == 3);
    CHECK(g.nodes[2].N == 6);
    CHECK(g.nodes[2].nu == 4);
    CHECK(g.nodes[3].N == 8);
    CHECK(g.nodes[3].nu == 5);
    auto alpha = alpha_terms(g);
    CHECK(alpha[0] == q(1, 2));
    CHECK(alpha[1] == q(0));
    CHECK(alpha[2] == q(-1, 2));
    // chi of the complement: 3 + 4 - (6*2 - 5) = 0
    CHECK(3 + g.n_exceptional - (2 * (long)g.nodes.size() - (long)g.edges.size()) == 0);
    CHECK(verify_graph_identities(g).all_pass);
}

TEST_CASE("mutated graphs fail verification") {
    std::mt19937 rng(555);
    auto g0 = build_resolution_graph(make_sf(5, 3, {1, 1}, 1, 2, 0));
    REQUIRE(verify_graph_identities(g0).all_pass);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = g0;
        std::uniform_int_distribution<size_t> pick(0, g.nodes.size() - 1);
        size_t i = pick(rng);
        if (g.nodes[i].kind != NodeKind::Exceptional) continue;
        g.nodes[i].N += 1;
        CHECK(!verify_graph_identities(g).all_pass);
    }
    auto g = two_conics_fixture();
    g.nodes[2].N += 1;
    CHECK(!verify_graph_identities(g).all_pass);
}

TEST_CASE("graph sweep over small parameters") {
    for (int t = 2; t <= 6; ++t)
        for (int u = 1; u < t; ++u) {
            if (gcd_long(t, u) != 1) continue;
            for (int a1 : {0, 2})
                for (int a3 : {0, 1}) {
                    auto sf = make_sf(t, u, {1, 2}, a1, 1, a3);
                    auto g = build_resolution_graph(sf);
                    auto rep = verify_graph_identities(g);
                    if (!rep.all_pass)
                        for (auto& f : rep.failures) MESSAGE(f);
                    CHECK(rep.all_pass);
                    const ResNode& e = g.node(g.e_id);
                    CHECK(e.N == (long)t * u * 3 + t * a1 + u);
                    CHECK(e.nu == t + u);
                }
        }
}

TEST_CASE("dot export mentions every node") {
    auto g = two_conics_fixture();
    std::string dot = graph_to_dot(g);
    CHECK(dot.find("graph resolution") != std::string::npos);
    CHECK(dot.find("n0") != std::string::npos);
    CHECK(dot.find("n5") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}
