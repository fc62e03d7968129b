#include <doctest.h>

#include <algorithm>
#include <set>

#include "grlpa/lpa.hpp"
#include "test_util.hpp"

using namespace grlpa;
using namespace testutil;

namespace {

const Field kQ = Field::rationals();

LpaElement vtx(const Graph& g, const std::string& id) {
    return LpaElement::vertex(g, kQ, *g.vertex_index(id));
}
LpaElement edg(const Graph& g, const std::string& id) {
    return LpaElement::edge(g, kQ, *g.edge_index(id));
}
LpaElement ghost(const Graph& g, const std::string& id) {
    return LpaElement::ghost_edge(g, kQ, *g.edge_index(id));
}

// The five defining identities, checked by normalized arithmetic.
void check_axioms(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto ev = LpaElement::vertex(g, kQ, v);
        for (int w = 0; w < g.vertex_count(); ++w) {
            auto ew = LpaElement::vertex(g, kQ, w);
            auto prod = lpa_mul(ev, ew);
            if (v == w)
                CHECK(prod == ev);
            else
                CHECK(prod.is_zero());
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto xe = LpaElement::edge(g, kQ, e);
        auto xes = LpaElement::ghost_edge(g, kQ, e);
        auto s = LpaElement::vertex(g, kQ, g.edge(e).src);
        auto r = LpaElement::vertex(g, kQ, g.edge(e).dst);
        CHECK(lpa_mul(s, xe) == xe);
        CHECK(lpa_mul(xe, r) == xe);
        CHECK(lpa_mul(r, xes) == xes);
        CHECK(lpa_mul(xes, s) == xes);
        for (int f = 0; f < g.edge_count(); ++f) {
            auto prod = lpa_mul(xes, LpaElement::edge(g, kQ, f));
            if (e == f)
                CHECK(prod == r);
            else
                CHECK(prod.is_zero());
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.out_edges(v).empty()) continue;
        auto sum = LpaElement::zero(g, kQ);
        for (int e : g.out_edges(v))
            sum = sum + lpa_mul(LpaElement::edge(g, kQ, e), LpaElement::ghost_edge(g, kQ, e));
        CHECK(sum == LpaElement::vertex(g, kQ, v));
    }
}

} // namespace

TEST_CASE("defining identities on the named graphs") {
    check_axioms(single_loop());
    check_axioms(rose_two_petals());
    check_axioms(two_cycle());
    check_axioms(single_edge());
    check_axioms(two_cycle_with_entrance());
}

TEST_CASE("defining identities on random graphs") {
    Rng rng(42);
    for (int trial = 0; trial < 25; ++trial) check_axioms(random_graph(rng));
}

TEST_CASE("products across distinct edges with a common source vanish") {
    auto g = rose_two_petals();
    CHECK(lpa_mul(ghost(g, "e"), edg(g, "f")).is_zero());
    CHECK(lpa_mul(ghost(g, "e"), edg(g, "e")) == vtx(g, "v"));
}

TEST_CASE("normal form from the oriented rewrite") {
    // single edge out of a regular vertex: e e* collapses to the vertex
    auto chain = single_edge();
    auto ee = lpa_mul(edg(chain, "e"), ghost(chain, "e"));
    CHECK(ee == vtx(chain, "v"));

    // two edges e < g out of v, so g is special: g g* -> v - e e*
    Graph fork;
    fork.add_vertex("v");
    fork.add_vertex("a");
    fork.add_vertex("b");
    fork.add_edge("e", "v", "a");
    fork.add_edge("g", "v", "b");
    auto gg = lpa_mul(edg(fork, "g"), ghost(fork, "g"));
    auto expected = vtx(fork, "v") - lpa_mul(edg(fork, "e"), ghost(fork, "e"));
    CHECK(gg == expected);
    // and e e* is already normal
    auto ee2 = lpa_mul(edg(fork, "e"), ghost(fork, "e"));
    CHECK(ee2.terms().size() == 1);
    // the rewrite preserves the defining sum
    CHECK(ee2 + gg == vtx(fork, "v"));

    CHECK(lpa_mul(vtx(fork, "v"), vtx(fork, "v")) == vtx(fork, "v"));
}

TEST_CASE("mixed-range monomials are zero") {
    auto g = single_edge();
    // 2 e f* with r(e) != r(f) does not exist here; use e* against a vertex path
    auto prod = lpa_mul(edg(g, "e"), edg(g, "e"));
    CHECK(prod.is_zero()); // e e has range mismatch inside the product
}

TEST_CASE("involution") {
    auto g = two_cycle();
    auto ef = lpa_mul(edg(g, "e"), ghost(g, "f")); // e f*
    auto fe = lpa_mul(edg(g, "f"), ghost(g, "e"));
    CHECK(lpa_involution(ef) == fe);
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Graph h = random_graph(rng);
        if (h.edge_count() == 0) continue;
        auto a = LpaElement::edge(h, kQ, rng.below(h.edge_count())) +
                 LpaElement::vertex(h, kQ, rng.below(h.vertex_count()));
        CHECK(lpa_involution(lpa_involution(a)) == a);
    }
    auto d = lpa_degree(ef);
    auto dstar = lpa_degree(lpa_involution(ef));
    REQUIRE(d.has_value());
    REQUIRE(dstar.has_value());
    CHECK(*dstar == -*d);
}

TEST_CASE("degree components") {
    auto g = single_loop();
    auto a = edg(g, "e") + vtx(g, "v");
    CHECK(lpa_component(a, 1) == edg(g, "e"));
    CHECK(lpa_component(a, 0) == vtx(g, "v"));
    CHECK(lpa_component(a, 2).is_zero());
    LpaElement sum = LpaElement::zero(g, kQ);
    for (int64_t d = -3; d <= 3; ++d) sum = sum + lpa_component(a, d);
    CHECK(sum == a);
}

TEST_CASE("homogeneous products multiply degrees additively") {
    Rng rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = random_graph(rng);
        auto paths = enumerate_paths(g, 2);
        if (paths.size() < 2) continue;
        const auto& p1 = paths[rng.below(static_cast<int>(paths.size()))];
        const auto& p2 = paths[rng.below(static_cast<int>(paths.size()))];
        auto a = LpaElement::monomial(g, kQ, Scalar::one(kQ), Monomial{p1.range, p1.edges, {}});
        auto b = LpaElement::monomial(g, kQ, Scalar::one(kQ), Monomial{p2.range, {}, p2.edges});
        auto ab = lpa_mul(a, b);
        if (ab.is_zero()) continue;
        auto d = lpa_degree(ab);
        REQUIRE(d.has_value());
        CHECK(*d == static_cast<int64_t>(p1.edges.size()) - static_cast<int64_t>(p2.edges.size()));
    }
}

TEST_CASE("idempotents") {
    auto g = two_cycle();
    CHECK(lpa_is_idempotent(vtx(g, "v")));
    CHECK(lpa_is_idempotent(lpa_mul(edg(g, "e"), ghost(g, "e"))));
    CHECK(!lpa_is_idempotent(edg(g, "e")));
}

TEST_CASE("corners") {
    auto g = single_loop();
    auto v = vtx(g, "v");
    auto c = edg(g, "e");
    CHECK(lpa_corner(c, v) == c);

    auto h = two_isolated();
    CHECK(lpa_corner(vtx(h, "w"), vtx(h, "v")).is_zero());

    // corner by the sum of all vertices acts as the identity
    Rng rng(77);
    for (int trial = 0; trial < 15; ++trial) {
        Graph k = random_graph(rng);
        LpaElement unit = LpaElement::zero(k, kQ);
        for (int vi = 0; vi < k.vertex_count(); ++vi)
            unit = unit + LpaElement::vertex(k, kQ, vi);
        LpaElement a = LpaElement::zero(k, kQ);
        for (int e = 0; e < k.edge_count(); ++e) a = a + LpaElement::edge(k, kQ, e);
        for (int vi = 0; vi < k.vertex_count(); ++vi)
            a = a + LpaElement::vertex(k, kQ, vi).scaled(Scalar::of_int(kQ, vi));
        CHECK(lpa_corner(a, unit) == a);
    }

    CHECK_THROWS_AS(lpa_corner(v, c), ContractViolation);
}

TEST_CASE("path products pp* collapse exactly when every source emits one edge") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng);
        for (const auto& entry : enumerate_paths(g, 4)) {
            if (entry.edges.empty()) continue;
            auto p = LpaElement::path(g, kQ, entry.edges);
            auto pstar = lpa_involution(p);
            bool collapsed =
                lpa_mul(p, pstar) == LpaElement::vertex(g, kQ, g.edge(entry.edges[0]).src);
            bool sole_emissions = true;
            for (int e : entry.edges)
                if (g.out_edges(g.edge(e).src).size() != 1) sole_emissions = false;
            CHECK(collapsed == sole_emissions);
        }
    }
}

TEST_CASE("normalization is order independent") {
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng);
        auto paths = enumerate_paths(g, 3);
        std::vector<RawTerm> raw;
        for (int t = 0; t < 6; ++t) {
            const auto& p = paths[rng.below(static_cast<int>(paths.size()))];
            const auto& q = paths[rng.below(static_cast<int>(paths.size()))];
            if (p.range != q.range) continue;
            raw.push_back(
                RawTerm{Scalar::of_int(kQ, rng.below(7) - 3), Monomial{p.range, p.edges, q.edges}});
        }
        auto reference = lpa_normalize(g, kQ, raw);
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            std::vector<RawTerm> permuted = raw;
            for (size_t i = permuted.size(); i > 1; --i)
                std::swap(permuted[i - 1], permuted[rng.below(static_cast<int>(i))]);
            CHECK(lpa_normalize(g, kQ, permuted) == reference);
        }
    }
}

TEST_CASE("sums of vertices act as local units") {
    Rng rng(91);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng);
        auto paths = enumerate_paths(g, 3);
        std::vector<LpaElement> sample;
        for (int t = 0; t < 3; ++t) {
            const auto& p = paths[rng.below(static_cast<int>(paths.size()))];
            const auto& q = paths[rng.below(static_cast<int>(paths.size()))];
            if (p.range != q.range) continue;
            sample.push_back(
                LpaElement::monomial(g, kQ, Scalar::one(kQ), Monomial{p.range, p.edges, q.edges}));
        }
        std::set<int> touched;
        for (const auto& a : sample)
            for (const auto& [m, c] : a.terms()) {
                (void)c;
                touched.insert(m.p.empty() ? m.range_vertex : g.edge(m.p[0]).src);
                touched.insert(m.q.empty() ? m.range_vertex : g.edge(m.q[0]).src);
            }
        LpaElement u = LpaElement::zero(g, kQ);
        for (int v : touched) u = u + LpaElement::vertex(g, kQ, v);
        for (const auto& a : sample) CHECK(lpa_mul(lpa_mul(u, a), u) == a);
    }
}

TEST_CASE("element printing") {
    auto g = two_cycle();
    auto x = lpa_mul(edg(g, "e"), ghost(g, "f")) + vtx(g, "v").scaled(Scalar::of_int(kQ, -2));
    CHECK(x.to_string() == "-2 v + e f*");
    CHECK(LpaElement::zero(g, kQ).to_string() == "0");
}
