#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grlpa/graph.hpp"

namespace testutil {

// splitmix64: tiny deterministic generator, identical on every platform.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

inline grlpa::Graph random_graph(Rng& rng, int max_vertices = 4, int max_edges = 5) {
    grlpa::Graph g;
    int nv = 1 + rng.below(max_vertices);
    for (int v = 0; v < nv; ++v) g.add_vertex("v" + std::to_string(v));
    int ne = rng.below(max_edges + 1);
    for (int e = 0; e < ne; ++e)
        g.add_edge("e" + std::to_string(e), "v" + std::to_string(rng.below(nv)),
                   "v" + std::to_string(rng.below(nv)));
    return g;
}

inline grlpa::Graph single_loop() {
    grlpa::Graph g;
    g.add_vertex("v");
    g.add_edge("e", "v", "v");
    return g;
}

inline grlpa::Graph rose_two_petals() {
    grlpa::Graph g;
    g.add_vertex("v");
    g.add_edge("e", "v", "v");
    g.add_edge("f", "v", "v");
    return g;
}

inline grlpa::Graph two_cycle() {
    grlpa::Graph g;
    g.add_vertex("v");
    g.add_vertex("u");
    g.add_edge("e", "v", "u");
    g.add_edge("f", "u", "v");
    return g;
}

inline grlpa::Graph two_isolated() {
    grlpa::Graph g;
    g.add_vertex("v");
    g.add_vertex("w");
    return g;
}

inline grlpa::Graph single_edge() {
    grlpa::Graph g;
    g.add_vertex("v");
    g.add_vertex("w");
    g.add_edge("e", "v", "w");
    return g;
}

inline grlpa::Graph two_cycle_with_entrance() {
    grlpa::Graph g;
    g.add_vertex("v");
    g.add_vertex("u");
    g.add_vertex("w");
    g.add_edge("e", "v", "u");
    g.add_edge("f", "u", "v");
    g.add_edge("g", "w", "v");
    return g;
}

} // namespace testutil
