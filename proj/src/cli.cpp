#include "grlpa/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grlpa/oracle.hpp"
#include "grlpa/parse.hpp"

namespace grlpa {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructuralError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.vertex_id(v));
    j["edges"] = ordered_json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        ordered_json je;
        je["id"] = g.edge(e).id;
        je["src"] = g.vertex_id(g.edge(e).src);
        je["dst"] = g.vertex_id(g.edge(e).dst);
        j["edges"].push_back(je);
    }
    return j;
}

ordered_json facts_json(const GraphFacts& f) {
    ordered_json j;
    j["acyclic"] = f.acyclic;
    j["no_exit"] = f.no_exit;
    j["condition_K"] = f.condition_K;
    j["sinks_isolated"] = f.sinks_isolated_flag;
    if (f.edl_defined)
        j["edl"] = f.edl;
    else
        j["edl"] = nullptr;
    j["shape"] = to_string(f.shape);
    j["cycle_count"] = f.cycle_count;
    j["finite"] = true;
    j["row_finite"] = true;
    return j;
}

ordered_json ring_json(const GradedMatrixRing& ring) {
    ordered_json j;
    j["n"] = ring.n;
    j["base"] = ring.base == BaseKind::Laurent ? "laurent" : "k";
    if (ring.base == BaseKind::Laurent) j["m"] = ring.step;
    j["field"] = ring.field.to_string();
    j["shifts"] = ring.shifts;
    return j;
}

ordered_json matrix_json(const GMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.ring().n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.ring().n; ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

SearchWindow window_from_env() {
    SearchWindow w;
    const char* env = std::getenv("GL_ORACLE_WINDOW");
    if (!env) return w;
    std::string s(env);
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw StructuralError("GL_ORACLE_WINDOW must look like '-2..2'");
    try {
        w.degree_lo = std::stoll(s.substr(0, dots));
        w.degree_hi = std::stoll(s.substr(dots + 2));
    } catch (const std::exception&) {
        throw StructuralError("GL_ORACLE_WINDOW must look like '-2..2'");
    }
    if (w.degree_lo > w.degree_hi) throw StructuralError("GL_ORACLE_WINDOW is empty");
    return w;
}

Field parse_field(const std::string& text) {
    if (text == "q" || text == "Q") return Field::rationals();
    if (text.rfind("fp:", 0) == 0) return Field::prime(std::stoll(text.substr(3)));
    throw StructuralError("field must be 'q' or 'fp:P'");
}

GradedMatrixRing parse_ring(int n, const std::string& base, const std::string& shifts_text,
                            const std::string& field_text) {
    Field f = parse_field(field_text);
    std::vector<int64_t> shifts;
    std::stringstream ss(shifts_text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        shifts.push_back(std::stoll(part));
    }
    if (static_cast<int>(shifts.size()) != n)
        throw StructuralError("expected " + std::to_string(n) + " shifts");
    if (base == "k" || base == "K") return GradedMatrixRing::trivial(n, f, shifts);
    if (base.rfind("laurent:", 0) == 0)
        return GradedMatrixRing::laurent(n, f, std::stoll(base.substr(8)), shifts);
    throw StructuralError("base must be 'k' or 'laurent:M'");
}

/// Entries as rows separated by ';', entries by ','; each a Laurent literal.
GMatrix parse_matrix(const GradedMatrixRing& ring, const std::string& text) {
    GMatrix m = GMatrix::zeros(ring);
    std::stringstream rows(text);
    std::string row;
    int i = 0;
    while (std::getline(rows, row, ';')) {
        if (i >= ring.n) throw StructuralError("too many matrix rows");
        std::stringstream cols(row);
        std::string cell;
        int j = 0;
        while (std::getline(cols, cell, ',')) {
            if (j >= ring.n) throw StructuralError("too many matrix columns");
            auto value = LaurentPoly::parse(ring.field, ring.entry_step(), cell);
            if (!value) throw StructuralError("bad entry literal: " + cell);
            if (!value->is_zero()) m = m.with_entry(i, j, *value);
            ++j;
        }
        if (j != ring.n) throw StructuralError("expected " + std::to_string(ring.n) + " columns");
        ++i;
    }
    if (i != ring.n) throw StructuralError("expected " + std::to_string(ring.n) + " rows");
    return m;
}

int run_analyze(const std::string& path, bool json, bool strict, std::ostream& out) {
    GraphDoc doc = parse_graph(read_file(path));
    PropertyReport report = analyze_graph(doc.graph);
    if (json) {
        out << report_to_json(doc.graph, report);
    } else {
        out << "graph: " << path << "\n";
        const auto& f = report.facts();
        out << "facts: acyclic=" << (f.acyclic ? "yes" : "no")
            << " no_exit=" << (f.no_exit ? "yes" : "no")
            << " condition_K=" << (f.condition_K ? "yes" : "no")
            << " sinks_isolated=" << (f.sinks_isolated_flag ? "yes" : "no")
            << " edl=" << (f.edl_defined ? (f.edl ? "yes" : "no") : "n/a")
            << " shape=" << to_string(f.shape) << "\n";
        for (RingProp p : all_props()) {
            const Verdict& v = report.verdict(p);
            out << prop_name(p) << ": " << to_string(v.value) << "  (" << v.citation << ")\n";
        }
    }
    if (strict)
        for (RingProp p : all_props())
            if (report.verdict(p).value == Verdict::Unknown) return 1;
    return 0;
}

int run_decompose(const std::string& path, bool json, std::ostream& out) {
    GraphDoc doc = parse_graph(read_file(path));
    DecompositionDescriptor d = structural_decomposition(doc.graph);
    if (json) {
        out << decomposition_to_json(doc.graph, d);
        return 0;
    }
    for (const auto& s : d.summands) {
        out << (s.kind == DecompositionSummand::Sink ? "sink " : "cycle ") << s.anchor << ": "
            << s.ring(Field::rationals()).to_string() << "\n";
    }
    return 0;
}

int run_matrix(const GradedMatrixRing& ring, const std::string& check,
               const std::string& element_text, bool json, bool strict, std::ostream& out) {
    Verdict verdict = check == "clean" ? is_graded_clean_ring(ring) : graded_exchange_ring(ring);
    ordered_json j;
    j["schema_version"] = 1;
    j["ring"] = ring_json(ring);
    j["check"] = check;
    j["verdict"] = to_string(verdict.value);
    j["citation"] = verdict.citation;

    std::string text;
    if (!element_text.empty()) {
        GMatrix x = parse_matrix(ring, element_text);
        if (check == "exchange") {
            ExchangeWitness w = graded_exchange_witness(x);
            j["witness"] = ordered_json{{"e", matrix_json(w.e)}, {"r", matrix_json(w.r)},
                                        {"s", matrix_json(w.s)}};
            text = "witness e=" + w.e.to_string() + " r=" + w.r.to_string() + " s=" +
                   w.s.to_string() + "\n";
        } else {
            if (ring.field.is_rational())
                throw StructuralError("clean witness search requires --field fp:P");
            auto dec = brute_graded_clean(ring, x);
            if (dec) {
                j["witness"] = ordered_json{{"unit", matrix_json(dec->unit)},
                                            {"idempotent", matrix_json(dec->idempotent)}};
                text = "decomposition unit=" + dec->unit.to_string() + " idempotent=" +
                       dec->idempotent.to_string() + "\n";
            } else {
                j["witness"] = nullptr;
                text = "no graded clean decomposition\n";
            }
        }
    }
    if (json) {
        out << dump(j);
    } else {
        out << check << " " << ring.to_string() << ": " << to_string(verdict.value) << "  ("
            << verdict.citation << ")\n" << text;
    }
    return strict && verdict.value == Verdict::Unknown ? 1 : 0;
}

int run_oracle(const GradedMatrixRing& ring, const std::string& check, std::ostream& out) {
    SearchWindow w = window_from_env();
    for (int64_t d = w.degree_lo; d <= w.degree_hi; ++d) {
        for (const GMatrix& x : enumerate_homogeneous(ring, d)) {
            ordered_json j;
            j["ring"] = ring_json(ring);
            j["degree"] = d;
            j["x"] = matrix_json(x);
            if (check == "clean") {
                auto dec = brute_graded_clean(ring, x);
                j["outcome"] = dec ? "found" : "none";
                j["witness"] = dec ? ordered_json{{"unit", matrix_json(dec->unit)},
                                                  {"idempotent", matrix_json(dec->idempotent)}}
                                   : ordered_json(nullptr);
            } else {
                auto outcome = brute_graded_exchange(ring, x, w);
                j["outcome"] = outcome.kind == OutcomeKind::Found        ? "found"
                               : outcome.kind == OutcomeKind::None       ? "none"
                                                                         : "inconclusive";
                j["witness"] =
                    outcome.witness ? ordered_json(matrix_json(*outcome.witness)) : ordered_json(nullptr);
            }
            out << j.dump() << "\n";
        }
    }
    return 0;
}

int run_eval(const std::string& path, const std::string& expr, const std::string& field_text,
             bool json, std::ostream& out) {
    GraphDoc doc = parse_graph(read_file(path));
    Field f = parse_field(field_text);
    LpaElement value = parse_element(expr, doc.graph, f);
    std::vector<int64_t> degrees;
    for (const auto& [m, c] : value.terms()) {
        (void)c;
        if (std::find(degrees.begin(), degrees.end(), m.degree()) == degrees.end())
            degrees.push_back(m.degree());
    }
    std::sort(degrees.begin(), degrees.end());
    if (json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["input"] = expr;
        j["normal_form"] = value.to_string();
        ordered_json comps;
        for (int64_t d : degrees) comps[std::to_string(d)] = lpa_component(value, d).to_string();
        j["degree_components"] = comps;
        out << dump(j);
    } else {
        out << value.to_string() << "\n";
        for (int64_t d : degrees)
            out << "degree " << d << ": " << lpa_component(value, d).to_string() << "\n";
    }
    return 0;
}

} // namespace

std::string report_to_json(const Graph& g, const PropertyReport& report) {
    ordered_json j;
    j["schema_version"] = 1;
    j["graph"] = graph_json(g);
    j["unital"] = report.unital();
    j["facts"] = facts_json(report.facts());
    ordered_json props;
    for (RingProp p : all_props()) {
        const Verdict& v = report.verdict(p);
        props[prop_name(p)] = ordered_json{{"verdict", to_string(v.value)}, {"citation", v.citation}};
    }
    j["properties"] = props;
    return dump(j);
}

std::string decomposition_to_json(const Graph& g, const DecompositionDescriptor& d) {
    ordered_json j;
    j["schema_version"] = 1;
    j["graph"] = graph_json(g);
    ordered_json summands = ordered_json::array();
    for (const auto& s : d.summands) {
        ordered_json js;
        js["kind"] = s.kind == DecompositionSummand::Sink ? "sink" : "cycle";
        js["anchor"] = s.anchor;
        if (s.kind == DecompositionSummand::Cycle) {
            js["cycle"] = s.cycle_edges;
            js["base"] = "laurent";
            js["m"] = s.cycle_length;
        } else {
            js["base"] = "k";
        }
        js["n"] = s.shifts.size();
        js["shifts"] = s.shifts;
        summands.push_back(js);
    }
    j["summands"] = summands;
    return dump(j);
}

CliResult cli_run(const std::vector<std::string>& args) {
    CLI::App app{"exact graded-ring and path-algebra calculator"};
    app.require_subcommand(1);
    std::ostringstream out;

    std::string graph_path, expr, field_text = "q";
    bool json = false, strict = false;

    auto* analyze = app.add_subcommand("analyze", "analyze a graph file");
    analyze->add_option("graph", graph_path, "graph file")->required();
    analyze->add_flag("--json", json, "emit JSON");
    analyze->add_flag("--strict", strict, "exit 1 when any verdict is Unknown");

    auto* decompose = app.add_subcommand("decompose", "matrix-ring decomposition of a no-exit graph");
    decompose->add_option("graph", graph_path, "graph file")->required();
    decompose->add_flag("--json", json, "emit JSON");

    int n = 1;
    std::string base = "k", shifts_text = "0", check, element_text;
    auto* matrix = app.add_subcommand("matrix", "decide properties of a graded matrix ring");
    matrix->add_option("--n", n, "matrix size")->required();
    matrix->add_option("--base", base, "'k' or 'laurent:M'");
    matrix->add_option("--shifts", shifts_text, "comma-separated shifts")->required();
    matrix->add_option("--field", field_text, "'q' or 'fp:P'");
    matrix->add_option("check", check, "clean | exchange")->required();
    matrix->add_option("--element", element_text, "matrix literal rows ';' entries ','");
    matrix->add_flag("--json", json, "emit JSON");
    matrix->add_flag("--strict", strict, "exit 1 when the verdict is Unknown");

    auto* oracle = app.add_subcommand("oracle", "brute-force evidence records");
    oracle->add_option("--n", n, "matrix size")->required();
    oracle->add_option("--base", base, "'k' or 'laurent:M'");
    oracle->add_option("--shifts", shifts_text, "comma-separated shifts")->required();
    oracle->add_option("--field", field_text, "'fp:P'");
    oracle->add_option("check", check, "clean | exchange")->required();

    auto* eval = app.add_subcommand("eval", "normalize a path-algebra expression");
    eval->add_option("graph", graph_path, "graph file")->required();
    eval->add_option("-e,--expr", expr, "expression")->required();
    eval->add_option("--field", field_text, "'q' or 'fp:P'");
    eval->add_flag("--json", json, "emit JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream err;
        err << e.what() << "\n";
        return {err.str(), 2};
    }

    try {
        int code = 0;
        if (app.got_subcommand(analyze)) {
            code = run_analyze(graph_path, json, strict, out);
        } else if (app.got_subcommand(decompose)) {
            code = run_decompose(graph_path, json, out);
        } else if (app.got_subcommand(matrix)) {
            if (check != "clean" && check != "exchange")
                throw StructuralError("check must be 'clean' or 'exchange'");
            code = run_matrix(parse_ring(n, base, shifts_text, field_text), check, element_text,
                              json, strict, out);
        } else if (app.got_subcommand(oracle)) {
            if (check != "clean" && check != "exchange")
                throw StructuralError("check must be 'clean' or 'exchange'");
            code = run_oracle(parse_ring(n, base, shifts_text, field_text), check, out);
        } else if (app.got_subcommand(eval)) {
            code = run_eval(graph_path, expr, field_text, json, out);
        }
        return {out.str(), code};
    } catch (const ParseError& e) {
        return {std::string("error: ") + e.what() + "\n", 2};
    } catch (const StructuralError& e) {
        return {std::string("error: ") + e.what() + "\n", 2};
    } catch (const ContractViolation& e) {
        return {std::string("error: ") + e.what() + "\n", 2};
    }
}

} // namespace grlpa
