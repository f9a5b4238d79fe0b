#include "smc/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "smc/error.hpp"

namespace smc {

namespace {

long det2(const Ray& a, const Ray& b) {
    return a.first * b.second - a.second * b.first;
}

long ceil_div(long p, long q) {
    // q > 0
    return p >= 0 ? (p + q - 1) / q : -((-p) / q);
}

// x*a + y*b = gcd(a, b)
void ext_gcd(long a, long b, long& x, long& y) {
    if (b == 0) { x = 1; y = 0; return; }
    long x1, y1;
    ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

} // namespace

std::vector<Ray> hj_rays(Ray v, Ray w) {
    auto bad = [&](const std::string& msg) { fail(ErrorKind::DegenerateCone, msg); };
    if (v.first < 0 || v.second < 0 || w.first < 0 || w.second < 0)
        bad("rays must lie in the closed positive quadrant");
    if (gcd_long(v.first, v.second) != 1 || gcd_long(w.first, w.second) != 1)
        bad("rays must be primitive");
    long orient = det2(v, w);
    if (orient == 0) bad("rays are parallel");
    long s = orient > 0 ? 1 : -1;
    auto dets = [&](const Ray& a, const Ray& b) { return s * det2(a, b); };

    std::vector<Ray> out;
    Ray a = v;
    while (dets(a, w) > 1) {
        // solutions of dets(a, c) = 1 are c0 + t*a; pick the smallest t
        // keeping c on the w side (the hull successor of a)
        long alpha, beta;
        ext_gcd(a.first, a.second, alpha, beta); // alpha*a.x + beta*a.y = 1
        Ray c0{-beta * s, alpha * s};            // dets(a, c0) = 1
        long D = dets(a, w);
        long t = ceil_div(-dets(c0, w), D);
        Ray c{c0.first + t * a.first, c0.second + t * a.second};
        if (c.first < 0 || c.second < 0 || dets(a, c) != 1 || dets(c, w) < 0)
            fail(ErrorKind::InternalInconsistency, "hull walk left the cone");
        out.push_back(c);
        a = c;
    }
    return out;
}

bool ResolutionGraph::adjacent(int i, int j) const {
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
}

std::vector<int> ResolutionGraph::neighbors(int id) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == id) out.push_back(b);
        else if (b == id) out.push_back(a);
    }
    return out;
}

void ResolutionGraph::add_edge(int i, int j) {
    if (i == j) fail(ErrorKind::InvalidGraph, "self loop");
    edges.insert({std::min(i, j), std::max(i, j)});
}

namespace {

struct ChainSpec {
    int anchor;          // 0 at [0:0:1], 1 at [1:0:0]
    int start_line;      // line index of the (1,0) end
    int end_line;        // line index of the (0,1) end
    Ray center;          // (t,u) or (t,t-u)
    long coef_p, coef_q; // N = coef_p*p + coef_q*q + B*min(t*q, w*p)
    long wppart;         // w in min(t*q, w*p): u at P0, t-u at P1
};

} // namespace

ResolutionGraph build_resolution_graph(const StandardFormData& sf) {
    if (sf.u < 1) fail(ErrorKind::HyperplaneArrangement, "resolution graph needs u >= 1");
    long t = sf.t, u = sf.u, B = sf.b_total();
    if (B < 1) fail(ErrorKind::HyperplaneArrangement, "no branch curves");
    ResolutionGraph g;
    g.d = sf.d;

    // the three coordinate lines, kept as configuration curves even when
    // their divisor multiplicity a_i is zero
    const long a[3] = {(long)sf.a1, (long)sf.a2, (long)sf.a3};
    for (int i = 0; i < 3; ++i) {
        ResNode n;
        n.id = (int)g.nodes.size();
        n.kind = NodeKind::StrictLine;
        n.line_index = i;
        n.N = a[i];
        n.nu = 1;
        g.line_ids[i] = n.id;
        g.nodes.push_back(n);
    }

    auto build_chain = [&](const ChainSpec& cs) {
        std::vector<Ray> rays = hj_rays({1, 0}, cs.center);
        size_t center_pos = rays.size();
        rays.push_back(cs.center);
        for (const auto& r : hj_rays(cs.center, {0, 1})) rays.push_back(r);

        int prev = g.line_ids[cs.start_line];
        std::vector<int> ids;
        for (size_t i = 0; i < rays.size(); ++i) {
            ResNode n;
            n.id = (int)g.nodes.size();
            n.kind = NodeKind::Exceptional;
            n.anchor = cs.anchor;
            n.ray = rays[i];
            long p = rays[i].first, q = rays[i].second;
            n.N = cs.coef_p * p + cs.coef_q * q + B * std::min(t * q, cs.wppart * p);
            n.nu = p + q;
            g.nodes.push_back(n);
            ids.push_back(n.id);
            g.add_edge(prev, n.id);
            prev = n.id;
            ++g.n_exceptional;
        }
        g.add_edge(prev, g.line_ids[cs.end_line]);

        // fan relation kappa * v_i = v_{i-1} + v_{i+1} for chain rays
        for (size_t i = 0; i < rays.size(); ++i) {
            Ray left = i == 0 ? Ray{1, 0} : rays[i - 1];
            Ray right = i + 1 == rays.size() ? Ray{0, 1} : rays[i + 1];
            long sx = left.first + right.first, sy = left.second + right.second;
            long p = rays[i].first, q = rays[i].second;
            long k = -1;
            if (p != 0 && sx % p == 0) k = sx / p;
            else if (q != 0 && sy % q == 0) k = sy / q;
            if (k < 1 || k * p != sx || k * q != sy)
                fail(ErrorKind::InternalInconsistency, "fan relation failed on a chain ray");
            g.nodes[ids[i]].kappa = k;
        }
        return ids[center_pos];
    };

    // chain over [0:0:1]: E_x = (1,0), ..., E = (t,u), ..., E_y = (0,1)
    g.e_id = build_chain({0, 0, 1, Ray{t, u}, a[0], a[1], u});
    // chain over [1:0:0]: E_z = (1,0), ..., E' = (t,t-u), ..., E_y = (0,1)
    g.eprime_id = build_chain({1, 2, 1, Ray{t, t - u}, a[2], a[1], t - u});

    // branch curves, adjacent to exactly E and E'
    for (size_t qi = 0; qi < sf.b.size(); ++qi) {
        ResNode n;
        n.id = (int)g.nodes.size();
        n.kind = NodeKind::StrictBranch;
        n.branch_index = (int)qi;
        n.N = sf.b[qi];
        n.nu = 1;
        g.nodes.push_back(n);
        g.add_edge(n.id, g.e_id);
        g.add_edge(n.id, g.eprime_id);
    }

    // the untouched intersection of the x and z lines at [0:1:0]
    g.add_edge(g.line_ids[0], g.line_ids[2]);

    // the load relation kappa*N = sum of adjacent N must reproduce the fan
    // value of kappa at E and E' (the branches meet them transversally, so
    // no further blow-ups touch these curves)
    for (int id : {g.e_id, g.eprime_id}) {
        long sum = 0;
        for (int nb : g.neighbors(id)) sum += g.nodes[nb].N;
        long N = g.nodes[id].N;
        if (N < 1 || sum != *g.nodes[id].kappa * N)
            fail(ErrorKind::InternalInconsistency, "load relation failed at a center node");
    }

    // closed forms for the numerical data of E and E'
    const ResNode& e = g.nodes[g.e_id];
    const ResNode& ep = g.nodes[g.eprime_id];
    if (e.N != t * u * B + t * a[0] + u * a[1] || e.nu != t + u)
        fail(ErrorKind::InternalInconsistency, "closed form mismatch at E");
    if (ep.N != t * (t - u) * B + t * a[2] + (t - u) * a[1] || ep.nu != 2 * t - u)
        fail(ErrorKind::InternalInconsistency, "closed form mismatch at E'");
    return g;
}

AlphaMap alpha_terms(const ResolutionGraph& g) {
    AlphaMap out;
    for (const auto& n : g.nodes)
        out[n.id] = Rational(n.nu) - Rational(3, g.d) * Rational(n.N);
    return out;
}

void GraphCheckReport::check(bool ok, const std::string& what) {
    if (!ok) {
        all_pass = false;
        failures.push_back(what);
    }
}

GraphCheckReport verify_graph_identities(const ResolutionGraph& g) {
    GraphCheckReport rep;
    AlphaMap alpha = alpha_terms(g);
    for (const auto& n : g.nodes) {
        if (n.kind != NodeKind::Exceptional) continue;
        auto nbs = g.neighbors(n.id);
        if (!n.kappa) {
            rep.check(false, "exceptional node " + std::to_string(n.id) + " has no kappa");
            continue;
        }
        long k = *n.kappa;
        long sumN = 0;
        for (int nb : nbs) sumN += g.nodes[nb].N;
        rep.check(k * n.N == sumN, "load relation kappa*N at node " + std::to_string(n.id));
        if (nbs.size() == 2) {
            long sumnu = g.nodes[nbs[0]].nu + g.nodes[nbs[1]].nu;
            rep.check(k * n.nu == sumnu, "kappa*nu at node " + std::to_string(n.id));
            Rational sum_alpha = alpha[nbs[0]] + alpha[nbs[1]];
            rep.check(Rational(k) * alpha[n.id] == sum_alpha,
                      "kappa*alpha at node " + std::to_string(n.id));
        }
    }
    for (const auto& [i, j] : g.edges)
        rep.check(!(alpha[i].is_zero() && alpha[j].is_zero()),
                  "adjacent vanishing alphas at edge (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
    if (g.e_id >= 0 && g.eprime_id >= 0)
        rep.check((alpha[g.e_id] + alpha[g.eprime_id]).is_zero(), "alpha_E + alpha_E' = 0");
    // chi(F_0) = 3 + #exceptional; all configuration curves are rational and
    // the complement of the full configuration has Euler characteristic 0
    long chi_f0 = 3 + g.n_exceptional;
    long chi_curves = 2 * (long)g.nodes.size() - (long)g.edges.size();
    rep.check(chi_f0 == chi_curves, "Euler characteristic bookkeeping");
    return rep;
}

ResolutionGraph two_conics_fixture() {
    ResolutionGraph g;
    g.d = 4;
    g.n_exceptional = 4;
    auto add = [&](NodeKind kind, long N, long nu, std::optional<long> kappa) {
        ResNode n;
        n.id = (int)g.nodes.size();
        n.kind = kind;
        n.N = N;
        n.nu = nu;
        n.kappa = kappa;
        if (kind == NodeKind::StrictBranch) n.branch_index = n.id - 4;
        g.nodes.push_back(n);
        return n.id;
    };
    int e1 = add(NodeKind::Exceptional, 2, 2, 2);
    int e2 = add(NodeKind::Exceptional, 4, 3, 2);
    int e3 = add(NodeKind::Exceptional, 6, 4, 2);
    int e4 = add(NodeKind::Exceptional, 8, 5, 1);
    int c1 = add(NodeKind::StrictBranch, 1, 1, std::nullopt);
    int c2 = add(NodeKind::StrictBranch, 1, 1, std::nullopt);
    g.add_edge(e1, e2);
    g.add_edge(e2, e3);
    g.add_edge(e3, e4);
    g.add_edge(e4, c1);
    g.add_edge(e4, c2);
    return g;
}

std::string graph_to_dot(const ResolutionGraph& g) {
    std::ostringstream os;
    os << "graph resolution {\n";
    AlphaMap alpha = alpha_terms(g);
    for (const auto& n : g.nodes) {
        std::string name;
        std::string shape = "ellipse";
        switch (n.kind) {
            case NodeKind::Exceptional:
                if (n.id == g.e_id) name = "E";
                else if (n.id == g.eprime_id) name = "E'";
                else name = "F" + std::to_string(n.id);
                break;
            case NodeKind::StrictLine:
                name = std::string("L") + "xyz"[n.line_index];
                shape = "box";
                break;
            case NodeKind::StrictBranch:
                name = "C" + std::to_string(n.branch_index + 1);
                shape = "box";
                break;
        }
        os << "  n" << n.id << " [shape=" << shape << ", label=\"" << name << "\\n(N=" << n.N
           << ", nu=" << n.nu << ")\\nalpha=" << alpha[n.id].str();
        if (n.kappa) os << ", k=" << *n.kappa;
        os << "\"];\n";
    }
    for (const auto& [i, j] : g.edges) os << "  n" << i << " -- n" << j << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace smc
