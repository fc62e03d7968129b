#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grlpa/error.hpp"

namespace grlpa {

enum class VertexClass { Sink, Regular };

enum class GraphShape { DisjointVertices, SingleLoop, Other };

/// A cycle as an edge-index sequence e1..em with r(e_i) = s(e_{i+1}) and
/// r(e_m) = s(e_1), in which different edges have different sources. Stored in
/// canonical rotation: the rotation whose edge-id sequence is lexicographically
/// least comes first.
struct Cycle {
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const Cycle& o) const { return edges == o.edges; }
};

/// Finite directed multigraph with named vertices and named edges.
/// Immutable after construction; multi-edges and loops are fully supported
/// (edge identity is primary).
class Graph {
public:
    struct Edge {
        std::string id;
        int src;
        int dst;
    };

    Graph() = default;

    /// Throws StructuralError on duplicate ids or unknown endpoints.
    void add_vertex(const std::string& id);
    void add_edge(const std::string& id, const std::string& src, const std::string& dst);

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    std::optional<int> vertex_index(const std::string& id) const;
    std::optional<int> edge_index(const std::string& id) const;

    /// Edge indices emitted by v, in insertion order.
    const std::vector<int>& out_edges(int v) const { return out_[v]; }
    /// Edge indices received by v, in insertion order.
    const std::vector<int>& in_edges(int v) const { return in_[v]; }

    bool operator==(const Graph& o) const;

    /// Renders back to the DSL accepted by parse_graph.
    std::string render() const;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::map<std::string, int> vertex_by_id_;
    std::map<std::string, int> edge_by_id_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// A vertex is a sink iff it emits no edges, regular otherwise. Stored graphs
/// are row-finite by construction.
std::map<int, VertexClass> classify_vertices(const Graph& g);

/// All cycles up to rotation, each in canonical rotation, sorted by
/// (length, edge-id sequence). Empty iff the graph is acyclic.
std::vector<Cycle> enumerate_cycles(const Graph& g);

bool is_acyclic(const Graph& g);

/// True iff no vertex on a cycle emits an edge outside that cycle.
bool is_no_exit(const Graph& g);

/// True iff every vertex lying on some cycle lies on at least two distinct
/// cycles (distinct as canonical rotations). Vacuously true for acyclic graphs.
bool has_condition_K(const Graph& g);

/// True iff every sink neither emits nor receives edges.
bool sinks_isolated(const Graph& g);

/// Classification used by the graded-clean characterization: a collection of
/// disjoint vertices with no edges, a one-vertex one-loop graph, or anything else.
GraphShape graph_shape(const Graph& g);

/// The paths counted by the equal-distribution condition for a cycle c with
/// base vertex v: all paths ending at v that do not contain any rotation of c
/// as a contiguous edge subsequence. Returned as path lengths.
/// Requires a finite no-exit graph.
std::vector<int64_t> paths_to_cycle_vertex(const Graph& g, const Cycle& c, int base_vertex);

/// Equal-distribution condition: for every cycle of length m, the lengths
/// mod m of the counted paths ending at the base vertex occur with the same
/// multiplicity for every residue 0..m-1.
/// Throws ContractViolation unless the graph is finite and no-exit.
bool check_EDL(const Graph& g);

/// Same, for a single cycle with an explicit base vertex on that cycle.
bool check_EDL_at(const Graph& g, const Cycle& c, int base_vertex);

/// All paths ending at the given sink, as lengths. Requires no-exit.
std::vector<int64_t> paths_to_sink(const Graph& g, int sink);

/// Weakly connected components, as vertex-index lists.
std::vector<std::vector<int>> weak_components(const Graph& g);

/// True iff every weakly connected component is acyclic or consists of
/// exactly one cycle (all its vertices and edges on the cycle).
bool is_disjoint_union_of_acyclic_and_single_cycles(const Graph& g);

std::string to_string(GraphShape s);

} // namespace grlpa
