#pragma once

#include <map>
#include <optional>
#include <vector>

#include "grlpa/graph.hpp"
#include "grlpa/scalar.hpp"

namespace grlpa {

/// A basis monomial p q* of the path algebra: p and q are paths of the
/// underlying graph with a common range vertex. Empty paths are anchored at
/// the range vertex. In normal form, p and q do not both end with the same
/// edge when that edge is the special edge of its source.
struct Monomial {
    int range_vertex = -1;
    std::vector<int> p;
    std::vector<int> q;

    int64_t degree() const { return static_cast<int64_t>(p.size()) - static_cast<int64_t>(q.size()); }
    Monomial star() const { return Monomial{range_vertex, q, p}; }

    bool operator==(const Monomial& o) const {
        return range_vertex == o.range_vertex && p == o.p && q == o.q;
    }
    bool operator<(const Monomial& o) const;
};

/// One coefficient-monomial pair of a raw, not yet normalized combination.
struct RawTerm {
    Scalar coeff;
    Monomial mono;
};

/// An element of the path algebra of a fixed graph, stored in canonical
/// normal form: a map from normal-form monomials to nonzero coefficients.
/// Immutable after construction; the graph is shared and read-only.
class LpaElement {
public:
    static LpaElement zero(const Graph& g, const Field& f);
    static LpaElement vertex(const Graph& g, const Field& f, int v);
    static LpaElement edge(const Graph& g, const Field& f, int e);
    static LpaElement ghost_edge(const Graph& g, const Field& f, int e);
    static LpaElement path(const Graph& g, const Field& f, const std::vector<int>& edges);
    /// p q* for explicit paths with common range; zero if ranges mismatch.
    static LpaElement monomial(const Graph& g, const Field& f, const Scalar& c, const Monomial& m);

    const Graph& graph() const { return *graph_; }
    const Field& field() const { return field_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LpaElement operator+(const LpaElement& o) const;
    LpaElement operator-(const LpaElement& o) const;
    LpaElement operator-() const;
    LpaElement scaled(const Scalar& c) const;
    bool operator==(const LpaElement& o) const;
    bool operator!=(const LpaElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    friend LpaElement lpa_normalize(const Graph&, const Field&, const std::vector<RawTerm>&);
    LpaElement(const Graph& g, const Field& f) : graph_(&g), field_(f) {}

    const Graph* graph_;
    Field field_;
    std::map<Monomial, Scalar> terms_;
};

/// The special edge of a regular vertex: the lexicographically greatest edge
/// id among the edges it emits. The oriented CK2 rewrite eliminates monomials
/// whose p and q both end with this edge.
std::optional<int> special_edge(const Graph& g, int v);

/// Canonical form of a raw combination: monomials with mismatched ranges are
/// dropped as zero, then the oriented CK2 rule
///   g g* -> v - sum of e e* over the other edges e emitted by v
/// is applied at the tail of p/q until no monomial has both paths ending in
/// the special edge of their common source. The result is basis-unique.
LpaElement lpa_normalize(const Graph& g, const Field& f, const std::vector<RawTerm>& raw);

/// Exact product, fully normalized.
LpaElement lpa_mul(const LpaElement& a, const LpaElement& b);

/// The involution (sum k_i p_i q_i*)* = sum k_i q_i p_i*. The coefficient
/// involution is the identity.
LpaElement lpa_involution(const LpaElement& a);

/// Sum of the terms of degree d = |p| - |q|.
LpaElement lpa_component(const LpaElement& a, int64_t d);

/// Degree of a homogeneous element; nullopt when inhomogeneous or zero.
std::optional<int64_t> lpa_degree(const LpaElement& a);
bool lpa_is_homogeneous(const LpaElement& a);

bool lpa_is_idempotent(const LpaElement& a);

/// idem * a * idem; throws ContractViolation when idem is not idempotent.
LpaElement lpa_corner(const LpaElement& a, const LpaElement& idem);

/// Checks whether p is a valid path (consecutive ranges match sources).
bool is_valid_path(const Graph& g, const std::vector<int>& edges);

/// All paths of length <= max_len, including the trivial path at each vertex.
/// Returned as (start vertex unused; monomial-ready) edge lists with ranges.
struct PathListEntry {
    std::vector<int> edges;
    int range;
};
std::vector<PathListEntry> enumerate_paths(const Graph& g, int max_len);

/// Number of normal-form basis monomials of degree d. The enumeration bound
/// is valid for finite no-exit graphs, where one side of every normal-form
/// monomial stays within the acyclic part of the graph.
int64_t count_basis_monomials(const Graph& g, int64_t d);

} // namespace grlpa
