#pragma once

#include <string>
#include <string_view>

#include "grlpa/graph.hpp"
#include "grlpa/lpa.hpp"

namespace grlpa {

/// Parse error with source location (1-based line and column).
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// Parsed graph plus the source it came from.
struct GraphDoc {
    Graph graph;
    std::string source;
};

/// Grammar:
///   doc  := stmt*
///   stmt := "vertex" ID ";" | "edge" ID ":" ID "->" ID ";"
/// with "#" line comments. Duplicate ids and unknown endpoints are rejected
/// with their source location.
GraphDoc parse_graph(std::string_view text);

/// Grammar:
///   expr   := term ("+" term)*
///   term   := coeff? factor+
///   factor := ID | ID "*"
///   coeff  := "-"? INT ("/" INT)?
/// Factors multiply left to right; ID* is the ghost edge. The result is
/// normalized.
LpaElement parse_element(std::string_view text, const Graph& g, const Field& f);

} // namespace grlpa
