#include "grlpa/graph.hpp"

#include <algorithm>
#include <set>

namespace grlpa {

void Graph::add_vertex(const std::string& id) {
    if (vertex_by_id_.count(id) || edge_by_id_.count(id))
        throw StructuralError("duplicate id: " + id);
    vertex_by_id_[id] = vertex_count();
    vertex_ids_.push_back(id);
    out_.emplace_back();
    in_.emplace_back();
}

void Graph::add_edge(const std::string& id, const std::string& src, const std::string& dst) {
    if (vertex_by_id_.count(id) || edge_by_id_.count(id))
        throw StructuralError("duplicate id: " + id);
    auto s = vertex_index(src);
    if (!s) throw StructuralError("unknown vertex: " + src);
    auto r = vertex_index(dst);
    if (!r) throw StructuralError("unknown vertex: " + dst);
    edge_by_id_[id] = edge_count();
    out_[*s].push_back(edge_count());
    in_[*r].push_back(edge_count());
    edges_.push_back(Edge{id, *s, *r});
}

std::optional<int> Graph::vertex_index(const std::string& id) const {
    auto it = vertex_by_id_.find(id);
    if (it == vertex_by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Graph::edge_index(const std::string& id) const {
    auto it = edge_by_id_.find(id);
    if (it == edge_by_id_.end()) return std::nullopt;
    return it->second;
}

bool Graph::operator==(const Graph& o) const {
    if (vertex_ids_ != o.vertex_ids_) return false;
    if (edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id != o.edges_[i].id || edges_[i].src != o.edges_[i].src ||
            edges_[i].dst != o.edges_[i].dst)
            return false;
    return true;
}

std::string Graph::render() const {
    std::string out;
    for (const auto& v : vertex_ids_) out += "vertex " + v + ";\n";
    for (const auto& e : edges_)
        out += "edge " + e.id + ": " + vertex_ids_[e.src] + " -> " + vertex_ids_[e.dst] + ";\n";
    return out;
}

std::map<int, VertexClass> classify_vertices(const Graph& g) {
    std::map<int, VertexClass> r;
    for (int v = 0; v < g.vertex_count(); ++v)
        r[v] = g.out_edges(v).empty() ? VertexClass::Sink : VertexClass::Regular;
    return r;
}

namespace {

// Rotates the edge sequence so the lexicographically least edge id starts.
Cycle canonical_rotation(const Graph& g, std::vector<int> edges) {
    size_t best = 0;
    for (size_t i = 1; i < edges.size(); ++i)
        if (g.edge(edges[i]).id < g.edge(edges[best]).id) best = i;
    std::rotate(edges.begin(), edges.begin() + best, edges.end());
    return Cycle{std::move(edges)};
}

// DFS over edges from `v`, visiting only unvisited vertices, closing at `root`.
// Sources along the walk are automatically distinct, so every closed walk found
// here is a cycle in the distinct-sources sense.
void cycle_dfs(const Graph& g, int root, int v, std::vector<int>& path, std::vector<bool>& on_path,
               std::vector<Cycle>& out) {
    for (int e : g.out_edges(v)) {
        int w = g.edge(e).dst;
        if (w == root) {
            path.push_back(e);
            out.push_back(canonical_rotation(g, path));
            path.pop_back();
        } else if (w > root && !on_path[w]) {
            path.push_back(e);
            on_path[w] = true;
            cycle_dfs(g, root, w, path, on_path, out);
            on_path[w] = false;
            path.pop_back();
        }
    }
}

} // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g) {
    std::vector<Cycle> found;
    std::vector<bool> on_path(g.vertex_count(), false);
    for (int root = 0; root < g.vertex_count(); ++root) {
        std::vector<int> path;
        on_path[root] = true;
        cycle_dfs(g, root, root, path, on_path, found);
        on_path[root] = false;
    }
    auto key = [&](const Cycle& c) {
        std::vector<std::string> ids;
        ids.reserve(c.edges.size());
        for (int e : c.edges) ids.push_back(g.edge(e).id);
        return ids;
    };
    std::sort(found.begin(), found.end(), [&](const Cycle& a, const Cycle& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        return key(a) < key(b);
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

bool is_acyclic(const Graph& g) { return enumerate_cycles(g).empty(); }

bool is_no_exit(const Graph& g) {
    for (const Cycle& c : enumerate_cycles(g)) {
        std::set<int> cycle_edges(c.edges.begin(), c.edges.end());
        for (int e : c.edges) {
            int v = g.edge(e).src;
            for (int f : g.out_edges(v))
                if (!cycle_edges.count(f)) return false;
        }
    }
    return true;
}

bool has_condition_K(const Graph& g) {
    std::vector<int> cycles_through(g.vertex_count(), 0);
    for (const Cycle& c : enumerate_cycles(g))
        for (int e : c.edges) cycles_through[g.edge(e).src] += 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cycles_through[v] == 1) return false;
    return true;
}

bool sinks_isolated(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.out_edges(v).empty() && !g.in_edges(v).empty()) return false;
    return true;
}

GraphShape graph_shape(const Graph& g) {
    if (g.edge_count() == 0) return GraphShape::DisjointVertices;
    if (g.vertex_count() == 1 && g.edge_count() == 1 && g.edge(0).src == g.edge(0).dst)
        return GraphShape::SingleLoop;
    return GraphShape::Other;
}

namespace {

// True when some rotation of `c` occurs as a prefix of `path`. Extensions add
// edges to the front, so a prefix test is enough when callers prune eagerly.
bool starts_with_rotation(const Graph& g, const std::vector<int>& path, const Cycle& c) {
    size_t m = c.edges.size();
    if (path.size() < m) return false;
    for (size_t r = 0; r < m; ++r) {
        bool match = true;
        for (size_t i = 0; i < m && match; ++i)
            if (path[i] != c.edges[(r + i) % m]) match = false;
        if (match) return true;
    }
    return false;
}

void backward_paths(const Graph& g, const Cycle& c, int v, std::vector<int>& path,
                    std::vector<int64_t>& lengths, int depth_cap) {
    if (static_cast<int>(path.size()) > depth_cap)
        throw InvariantViolation("path enumeration exceeded its depth bound");
    lengths.push_back(static_cast<int64_t>(path.size()));
    for (int e : g.in_edges(v)) {
        path.insert(path.begin(), e);
        if (!starts_with_rotation(g, path, c))
            backward_paths(g, c, g.edge(e).src, path, lengths, depth_cap);
        path.erase(path.begin());
    }
}

} // namespace

std::vector<int64_t> paths_to_cycle_vertex(const Graph& g, const Cycle& c, int base_vertex) {
    std::vector<int> path;
    std::vector<int64_t> lengths;
    int cap = c.length() + g.vertex_count() + g.edge_count() + 4;
    backward_paths(g, c, base_vertex, path, lengths, cap);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

bool check_EDL_at(const Graph& g, const Cycle& c, int base_vertex) {
    int64_t m = c.length();
    std::vector<int64_t> count(m, 0);
    for (int64_t len : paths_to_cycle_vertex(g, c, base_vertex)) count[len % m] += 1;
    for (int64_t i = 1; i < m; ++i)
        if (count[i] != count[0]) return false;
    return true;
}

bool check_EDL(const Graph& g) {
    if (!is_no_exit(g)) throw ContractViolation("EDL requires finite no-exit graph");
    for (const Cycle& c : enumerate_cycles(g))
        if (!check_EDL_at(g, c, g.edge(c.edges[0]).src)) return false;
    return true;
}

std::vector<int64_t> paths_to_sink(const Graph& g, int sink) {
    if (!g.out_edges(sink).empty()) throw ContractViolation("paths_to_sink: not a sink");
    std::vector<int64_t> lengths;
    int cap = g.vertex_count() + 1;
    // In a no-exit graph nothing reachable backwards from a sink lies on a
    // cycle, so the backward walk is vertex-simple.
    struct Walker {
        const Graph& g;
        std::vector<int64_t>& lengths;
        int cap;
        void walk(int v, int depth) {
            if (depth > cap) throw ContractViolation("paths_to_sink requires a no-exit graph");
            lengths.push_back(depth);
            for (int e : g.in_edges(v)) walk(g.edge(e).src, depth + 1);
        }
    } w{g, lengths, cap};
    w.walk(sink, 0);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::vector<std::vector<int>> weak_components(const Graph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    int n = 0;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (comp[start] != -1) continue;
        std::vector<int> stack{start};
        comp[start] = n;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.out_edges(v)) {
                int w = g.edge(e).dst;
                if (comp[w] == -1) { comp[w] = n; stack.push_back(w); }
            }
            for (int e : g.in_edges(v)) {
                int w = g.edge(e).src;
                if (comp[w] == -1) { comp[w] = n; stack.push_back(w); }
            }
        }
        ++n;
    }
    std::vector<std::vector<int>> out(n);
    for (int v = 0; v < g.vertex_count(); ++v) out[comp[v]].push_back(v);
    return out;
}

bool is_disjoint_union_of_acyclic_and_single_cycles(const Graph& g) {
    auto cycles = enumerate_cycles(g);
    std::vector<std::set<int>> cycle_vertices, cycle_edge_sets;
    for (const Cycle& c : cycles) {
        std::set<int> vs, es;
        for (int e : c.edges) { vs.insert(g.edge(e).src); es.insert(e); }
        cycle_vertices.push_back(std::move(vs));
        cycle_edge_sets.push_back(std::move(es));
    }
    for (const auto& component : weak_components(g)) {
        std::set<int> vs(component.begin(), component.end());
        std::vector<int> touching;
        for (size_t i = 0; i < cycles.size(); ++i)
            if (vs.count(*cycle_vertices[i].begin())) touching.push_back(static_cast<int>(i));
        if (touching.empty()) continue; // acyclic component
        if (touching.size() > 1) return false;
        const auto& cvs = cycle_vertices[touching[0]];
        const auto& ces = cycle_edge_sets[touching[0]];
        if (cvs.size() != vs.size()) return false;
        int edges_in_component = 0;
        for (int v : component)
            edges_in_component += static_cast<int>(g.out_edges(v).size());
        if (edges_in_component != static_cast<int>(ces.size())) return false;
    }
    return true;
}

std::string to_string(GraphShape s) {
    switch (s) {
        case GraphShape::DisjointVertices: return "disjoint_vertices";
        case GraphShape::SingleLoop: return "single_loop";
        default: return "other";
    }
}

} // namespace grlpa
