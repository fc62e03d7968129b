#include <doctest.h>

#include <algorithm>
#include <set>

#include "grlpa/graph.hpp"
#include "test_util.hpp"

using namespace grlpa;
using namespace testutil;

TEST_CASE("vertex classification") {
    Graph lone;
    lone.add_vertex("v");
    auto c1 = classify_vertices(lone);
    CHECK(c1[0] == VertexClass::Sink);

    auto c2 = classify_vertices(single_edge());
    CHECK(c2[0] == VertexClass::Regular);
    CHECK(c2[1] == VertexClass::Sink);

    auto c3 = classify_vertices(single_loop());
    CHECK(c3[0] == VertexClass::Regular);
}

TEST_CASE("cycle enumeration") {
    CHECK(enumerate_cycles(single_edge()).empty());
    CHECK(enumerate_cycles(single_loop()).size() == 1);
    CHECK(enumerate_cycles(single_loop())[0].length() == 1);

    // two loops at one vertex share their source, so the only cycles are the
    // two petals themselves
    auto rose = enumerate_cycles(rose_two_petals());
    REQUIRE(rose.size() == 2);
    CHECK(rose[0].length() == 1);
    CHECK(rose[1].length() == 1);

    auto two = enumerate_cycles(two_cycle());
    REQUIRE(two.size() == 1);
    CHECK(two[0].length() == 2);
}

TEST_CASE("cycles come in canonical rotation") {
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge("z", "a", "b"); // lexicographically later id first in insertion
    g.add_edge("c", "b", "a");
    auto cycles = enumerate_cycles(g);
    REQUIRE(cycles.size() == 1);
    CHECK(g.edge(cycles[0].edges[0]).id == "c");
    CHECK(g.edge(cycles[0].edges[1]).id == "z");
}

TEST_CASE("acyclicity") {
    CHECK(is_acyclic(single_edge()));
    CHECK(!is_acyclic(single_loop()));
    Graph empty;
    CHECK(is_acyclic(empty));
}

TEST_CASE("no-exit") {
    CHECK(is_no_exit(single_loop()));
    CHECK(!is_no_exit(rose_two_petals()));
    CHECK(is_no_exit(two_cycle()));
    CHECK(is_no_exit(two_cycle_with_entrance()));
}

TEST_CASE("condition K") {
    CHECK(!has_condition_K(single_loop()));
    CHECK(has_condition_K(rose_two_petals()));
    CHECK(has_condition_K(single_edge())); // vacuous
    CHECK(!has_condition_K(two_cycle()));
}

TEST_CASE("sinks isolated") {
    CHECK(!sinks_isolated(single_edge()));
    Graph loop_plus_isolated = single_loop();
    loop_plus_isolated.add_vertex("u");
    CHECK(sinks_isolated(loop_plus_isolated));
    CHECK(sinks_isolated(single_loop())); // vacuous, no sinks
}

TEST_CASE("graph shape classification") {
    Graph three;
    three.add_vertex("a");
    three.add_vertex("b");
    three.add_vertex("c");
    CHECK(graph_shape(three) == GraphShape::DisjointVertices);
    CHECK(graph_shape(single_loop()) == GraphShape::SingleLoop);
    CHECK(graph_shape(single_edge()) == GraphShape::Other);
    CHECK(graph_shape(rose_two_petals()) == GraphShape::Other);
}

TEST_CASE("equal-distribution condition") {
    CHECK(check_EDL(single_loop()));
    CHECK(check_EDL(two_cycle()));

    // single cycle of any length
    for (int m = 1; m <= 4; ++m) {
        Graph g;
        for (int i = 0; i < m; ++i) g.add_vertex("v" + std::to_string(i));
        for (int i = 0; i < m; ++i)
            g.add_edge("e" + std::to_string(i), "v" + std::to_string(i),
                       "v" + std::to_string((i + 1) % m));
        CHECK(check_EDL(g));
    }

    // lengths at the base vertex are {0, 1, 1}: unbalanced
    CHECK(!check_EDL(two_cycle_with_entrance()));

    // adding an entrance into the other cycle vertex rebalances: {0, 1, 1, 2}
    Graph balanced = two_cycle_with_entrance();
    balanced.add_vertex("w2");
    balanced.add_edge("h", "w2", "u");
    CHECK(check_EDL(balanced));

    CHECK_THROWS_AS(check_EDL(rose_two_petals()), ContractViolation);
}

TEST_CASE("counted path lengths for the entrance example") {
    auto g = two_cycle_with_entrance();
    auto cycles = enumerate_cycles(g);
    REQUIRE(cycles.size() == 1);
    int base = g.edge(cycles[0].edges[0]).src;
    CHECK(g.vertex_id(base) == "v");
    auto lengths = paths_to_cycle_vertex(g, cycles[0], base);
    CHECK(lengths == std::vector<int64_t>{0, 1, 1});
}

TEST_CASE("EDL verdict does not depend on the base vertex") {
    std::vector<Graph> graphs = {single_loop(), two_cycle(), two_cycle_with_entrance()};
    Graph balanced = two_cycle_with_entrance();
    balanced.add_vertex("w2");
    balanced.add_edge("h", "w2", "u");
    graphs.push_back(balanced);
    Rng rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng);
        if (!is_no_exit(g)) continue;
        graphs.push_back(g);
    }
    for (const Graph& g : graphs) {
        for (const Cycle& c : enumerate_cycles(g)) {
            bool first = check_EDL_at(g, c, g.edge(c.edges[0]).src);
            for (int e : c.edges) CHECK(check_EDL_at(g, c, g.edge(e).src) == first);
        }
    }
}

TEST_CASE("acyclic iff no cycles, over random graphs") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(rng);
        CHECK(is_acyclic(g) == enumerate_cycles(g).empty());
    }
}

TEST_CASE("a cycle in a no-exit graph is the only cycle through its vertices") {
    Rng rng(6);
    int seen_with_cycle = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng);
        if (!is_no_exit(g) || is_acyclic(g)) continue;
        ++seen_with_cycle;
        CHECK(!has_condition_K(g));
    }
    CHECK(seen_with_cycle > 5);
}

TEST_CASE("cycle census is invariant under id relabeling") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng);
        Graph relabeled;
        // reverse the id alphabet: z<index> names, vertices added in reverse
        for (int v = g.vertex_count() - 1; v >= 0; --v) relabeled.add_vertex("z" + std::to_string(v));
        for (int e = 0; e < g.edge_count(); ++e)
            relabeled.add_edge("w" + std::to_string(g.edge_count() - 1 - e),
                               "z" + std::to_string(g.edge(e).src),
                               "z" + std::to_string(g.edge(e).dst));
        auto a = enumerate_cycles(g);
        auto b = enumerate_cycles(relabeled);
        REQUIRE(a.size() == b.size());
        std::multiset<int> lengths_a, lengths_b;
        for (const auto& c : a) lengths_a.insert(c.length());
        for (const auto& c : b) lengths_b.insert(c.length());
        CHECK(lengths_a == lengths_b);
    }
}

TEST_CASE("weak components and the sufficient exchange class") {
    Graph g = single_loop();
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge("t", "a", "b");
    CHECK(weak_components(g).size() == 2);
    CHECK(is_disjoint_union_of_acyclic_and_single_cycles(g));

    CHECK(is_disjoint_union_of_acyclic_and_single_cycles(two_cycle()));
    CHECK(is_disjoint_union_of_acyclic_and_single_cycles(single_edge()));
    CHECK(!is_disjoint_union_of_acyclic_and_single_cycles(two_cycle_with_entrance()));
    CHECK(!is_disjoint_union_of_acyclic_and_single_cycles(rose_two_petals()));
}

TEST_CASE("graph construction errors") {
    Graph g;
    g.add_vertex("v");
    CHECK_THROWS_AS(g.add_vertex("v"), StructuralError);
    CHECK_THROWS_AS(g.add_edge("e", "v", "w"), StructuralError);
    g.add_edge("e", "v", "v");
    CHECK_THROWS_AS(g.add_edge("e", "v", "v"), StructuralError);
}
