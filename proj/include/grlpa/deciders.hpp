#pragma once

#include <map>
#include <string>
#include <vector>

#include "grlpa/gmatrix.hpp"
#include "grlpa/graph.hpp"

namespace grlpa {

enum class RingProp {
    Reg, UR, Sr1, DF, Cln, Exch,
    RegGr, URGr, Sr1Gr, DFGr, ClnGr, ExchGr,
    UREps, Sr1Eps, DFEps, ClnEps, ExchEps,
};

const char* prop_name(RingProp p);
/// Fixed emission order for reports.
const std::vector<RingProp>& all_props();

/// Derived graph facts feeding the verdicts.
struct GraphFacts {
    bool acyclic = false;
    bool no_exit = false;
    bool condition_K = false;
    bool sinks_isolated_flag = false;
    bool edl = false;       // meaningful only when no_exit
    bool edl_defined = false;
    GraphShape shape = GraphShape::Other;
    bool acyclic_and_single_cycles = false;
    int cycle_count = 0;
};

GraphFacts graph_facts(const Graph& g);

/// Per-graph verdict set over the property list. Implication consistency is
/// checked at construction; a violation is an InvariantViolation.
class PropertyReport {
public:
    PropertyReport(GraphFacts facts, std::map<RingProp, Verdict> verdicts);

    const GraphFacts& facts() const { return facts_; }
    const Verdict& verdict(RingProp p) const;
    const std::map<RingProp, Verdict>& verdicts() const { return verdicts_; }
    /// Stored graphs always have finitely many vertices, so the algebra is unital.
    bool unital() const { return true; }

    /// Re-runs the implication audit, throwing on violation.
    void audit() const;

private:
    GraphFacts facts_;
    std::map<RingProp, Verdict> verdicts_;
};

/// The implication arrows every report must satisfy, as (antecedent, consequent).
const std::vector<std::pair<RingProp, RingProp>>& implication_arrows();

/// Full pairing of graph properties with ring properties.
PropertyReport analyze_graph(const Graph& g);

/// One matrix-ring summand per sink and per cycle of a finite no-exit graph.
struct DecompositionSummand {
    enum Kind { Sink, Cycle } kind;
    std::string anchor;                   // sink vertex id / cycle base vertex id
    std::vector<std::string> cycle_edges; // empty for sinks
    int64_t cycle_length = 0;             // 0 for sinks
    std::vector<int64_t> shifts;          // path lengths, ascending

    /// Ring descriptor over the given field.
    GradedMatrixRing ring(const Field& f) const;
};

struct DecompositionDescriptor {
    std::vector<DecompositionSummand> summands;
};

/// Requires a finite no-exit graph; throws ContractViolation otherwise.
/// Sinks contribute M_#paths(K)(path lengths); a cycle of length m contributes
/// M_#paths(K[x^m, x^-m])(path lengths) where the paths end at the base vertex
/// and do not contain the cycle. Every cycle summand covers each residue mod m
/// at least once.
DecompositionDescriptor structural_decomposition(const Graph& g);

/// K-dimension of the degree-d component of the decomposition.
int64_t decomposition_component_dimension(const DecompositionDescriptor& d, int64_t degree);

} // namespace grlpa
