#include "grlpa/deciders.hpp"

#include <algorithm>

namespace grlpa {

const char* prop_name(RingProp p) {
    switch (p) {
        case RingProp::Reg: return "Reg";
        case RingProp::UR: return "UR";
        case RingProp::Sr1: return "sr1";
        case RingProp::DF: return "DF";
        case RingProp::Cln: return "Cln";
        case RingProp::Exch: return "Exch";
        case RingProp::RegGr: return "Reg_gr";
        case RingProp::URGr: return "UR_gr";
        case RingProp::Sr1Gr: return "sr1_gr";
        case RingProp::DFGr: return "DF_gr";
        case RingProp::ClnGr: return "Cln_gr";
        case RingProp::ExchGr: return "Exch_gr";
        case RingProp::UREps: return "UR_eps";
        case RingProp::Sr1Eps: return "sr1_eps";
        case RingProp::DFEps: return "DF_eps";
        case RingProp::ClnEps: return "Cln_eps";
        case RingProp::ExchEps: return "Exch_eps";
    }
    return "?";
}

const std::vector<RingProp>& all_props() {
    static const std::vector<RingProp> props = {
        RingProp::Reg,    RingProp::UR,     RingProp::Sr1,    RingProp::DF,     RingProp::Cln,
        RingProp::Exch,   RingProp::RegGr,  RingProp::URGr,   RingProp::Sr1Gr,  RingProp::DFGr,
        RingProp::ClnGr,  RingProp::ExchGr, RingProp::UREps,  RingProp::Sr1Eps, RingProp::DFEps,
        RingProp::ClnEps, RingProp::ExchEps,
    };
    return props;
}

GraphFacts graph_facts(const Graph& g) {
    GraphFacts f;
    f.acyclic = is_acyclic(g);
    f.no_exit = is_no_exit(g);
    f.condition_K = has_condition_K(g);
    f.sinks_isolated_flag = sinks_isolated(g);
    f.shape = graph_shape(g);
    f.acyclic_and_single_cycles = is_disjoint_union_of_acyclic_and_single_cycles(g);
    f.cycle_count = static_cast<int>(enumerate_cycles(g).size());
    if (f.no_exit) {
        f.edl = check_EDL(g);
        f.edl_defined = true;
    }
    return f;
}

const std::vector<std::pair<RingProp, RingProp>>& implication_arrows() {
    // D1 arrows plus the persisting UR => Reg, and the graded arrows of D2
    // specialized to these reports (the graded-unit-regular box is a single
    // equivalence class with graded stable range one).
    static const std::vector<std::pair<RingProp, RingProp>> arrows = {
        {RingProp::UR, RingProp::Reg},
        {RingProp::Sr1, RingProp::DF},
        {RingProp::Cln, RingProp::Exch},
        {RingProp::ClnGr, RingProp::URGr},
        {RingProp::ClnGr, RingProp::ExchGr},
        {RingProp::URGr, RingProp::Sr1Gr},
        {RingProp::Sr1Gr, RingProp::URGr},
        {RingProp::URGr, RingProp::DFGr},
        {RingProp::ExchGr, RingProp::RegGr},
        {RingProp::DFGr, RingProp::RegGr},
        {RingProp::ClnGr, RingProp::ClnEps},
        {RingProp::ExchGr, RingProp::ExchEps},
        {RingProp::URGr, RingProp::UREps},
        {RingProp::Sr1Gr, RingProp::Sr1Eps},
        {RingProp::DFGr, RingProp::DFEps},
    };
    return arrows;
}

PropertyReport::PropertyReport(GraphFacts facts, std::map<RingProp, Verdict> verdicts)
    : facts_(facts), verdicts_(std::move(verdicts)) {
    audit();
}

const Verdict& PropertyReport::verdict(RingProp p) const {
    auto it = verdicts_.find(p);
    if (it == verdicts_.end()) throw StructuralError("missing verdict");
    return it->second;
}

void PropertyReport::audit() const {
    // conjunction arrows of D1: Reg + sr1 implies UR and Cln
    auto v = [&](RingProp p) { return verdict(p).value; };
    if (v(RingProp::Reg) == Verdict::Yes && v(RingProp::Sr1) == Verdict::Yes) {
        if (v(RingProp::UR) != Verdict::Yes)
            throw InvariantViolation("implication audit: Reg + sr1 => UR violated");
        if (v(RingProp::Cln) != Verdict::Yes)
            throw InvariantViolation("implication audit: Reg + sr1 => Cln violated");
    }
    for (const auto& [from, to] : implication_arrows()) {
        if (v(from) == Verdict::Yes && v(to) != Verdict::Yes)
            throw InvariantViolation(std::string("implication audit: ") + prop_name(from) + " => " +
                                     prop_name(to) + " violated");
    }
}

PropertyReport analyze_graph(const Graph& g) {
    GraphFacts f = graph_facts(g);
    std::map<RingProp, Verdict> v;

    Verdict::Value acyclic = f.acyclic ? Verdict::Yes : Verdict::No;
    v[RingProp::Reg] = {acyclic, "regular_iff_acyclic"};
    v[RingProp::UR] = {acyclic, "unit_regular_iff_acyclic"};
    v[RingProp::Sr1] = {acyclic, "stable_range_one_iff_acyclic"};
    v[RingProp::DF] = {f.no_exit ? Verdict::Yes : Verdict::No, "directly_finite_iff_no_exit"};
    v[RingProp::Exch] = {f.condition_K ? Verdict::Yes : Verdict::No, "exchange_iff_condition_K"};
    if (f.acyclic)
        v[RingProp::Cln] = {Verdict::Yes, "clean_if_acyclic"};
    else if (!f.condition_K)
        v[RingProp::Cln] = {Verdict::No, "clean_implies_exchange"};
    else
        v[RingProp::Cln] = {Verdict::Unknown, "clean_open_between_acyclic_and_condition_K"};

    v[RingProp::RegGr] = {Verdict::Yes, "graded_regular_always"};
    v[RingProp::DFGr] = {f.no_exit ? Verdict::Yes : Verdict::No, "graded_directly_finite_iff_no_exit"};
    bool cln_gr = f.shape == GraphShape::DisjointVertices || f.shape == GraphShape::SingleLoop;
    v[RingProp::ClnGr] = {cln_gr ? Verdict::Yes : Verdict::No, "graded_clean_characterization"};
    bool ur_gr = f.no_exit && f.sinks_isolated_flag && f.edl_defined && f.edl;
    v[RingProp::URGr] = {ur_gr ? Verdict::Yes : Verdict::No, "graded_unit_regular_characterization"};
    v[RingProp::Sr1Gr] = {ur_gr ? Verdict::Yes : Verdict::No, "graded_unit_regular_characterization"};
    if (!f.no_exit)
        v[RingProp::ExchGr] = {Verdict::No, "graded_exchange_requires_no_exit"};
    else if (f.acyclic_and_single_cycles)
        v[RingProp::ExchGr] = {Verdict::Yes, "graded_exchange_sufficient_class"};
    else
        v[RingProp::ExchGr] = {Verdict::Unknown, "graded_exchange_open_zone"};

    for (RingProp p : {RingProp::UREps, RingProp::Sr1Eps, RingProp::DFEps, RingProp::ClnEps,
                       RingProp::ExchEps})
        v[p] = {Verdict::Yes, "zero_component_locally_unit_regular"};

    return PropertyReport(f, std::move(v));
}

GradedMatrixRing DecompositionSummand::ring(const Field& f) const {
    if (kind == Sink) return GradedMatrixRing::trivial(static_cast<int>(shifts.size()), f, shifts);
    return GradedMatrixRing::laurent(static_cast<int>(shifts.size()), f, cycle_length, shifts);
}

DecompositionDescriptor structural_decomposition(const Graph& g) {
    if (!is_no_exit(g))
        throw ContractViolation("structural decomposition requires a finite no-exit graph");
    DecompositionDescriptor out;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (!g.out_edges(s).empty()) continue;
        DecompositionSummand sum;
        sum.kind = DecompositionSummand::Sink;
        sum.anchor = g.vertex_id(s);
        sum.shifts = paths_to_sink(g, s);
        out.summands.push_back(std::move(sum));
    }
    for (const Cycle& c : enumerate_cycles(g)) {
        DecompositionSummand sum;
        sum.kind = DecompositionSummand::Cycle;
        int base = g.edge(c.edges[0]).src;
        sum.anchor = g.vertex_id(base);
        for (int e : c.edges) sum.cycle_edges.push_back(g.edge(e).id);
        sum.cycle_length = c.length();
        sum.shifts = paths_to_cycle_vertex(g, c, base);
        // the cycle contributes its own path suffixes, so every residue occurs
        std::vector<bool> seen(static_cast<size_t>(sum.cycle_length), false);
        for (int64_t l : sum.shifts) seen[static_cast<size_t>(l % sum.cycle_length)] = true;
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            throw InvariantViolation("cycle summand misses a shift residue");
        out.summands.push_back(std::move(sum));
    }
    return out;
}

int64_t decomposition_component_dimension(const DecompositionDescriptor& d, int64_t degree) {
    int64_t dim = 0;
    for (const auto& s : d.summands) {
        int n = static_cast<int>(s.shifts.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int64_t e = degree - s.shifts[i] + s.shifts[j];
                if (s.kind == DecompositionSummand::Sink ? e == 0 : e % s.cycle_length == 0) ++dim;
            }
    }
    return dim;
}

} // namespace grlpa
