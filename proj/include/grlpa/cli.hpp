#pragma once

#include <string>
#include <vector>

#include "grlpa/deciders.hpp"

namespace grlpa {

struct CliResult {
    std::string output;
    int exit_code = 0;
};

/// Runs one CLI invocation (argv without the program name) and returns what
/// would be printed plus the exit code: 0 success, 1 Unknown verdict under
/// --strict, 2 input error.
CliResult cli_run(const std::vector<std::string>& args);

/// Stable JSON text of a property report (schema_version 1, fixed key order,
/// two-space indent, trailing newline).
std::string report_to_json(const Graph& g, const PropertyReport& report);

std::string decomposition_to_json(const Graph& g, const DecompositionDescriptor& d);

} // namespace grlpa
