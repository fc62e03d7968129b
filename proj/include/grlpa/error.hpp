#pragma once

#include <stdexcept>
#include <string>

namespace grlpa {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or mismatched values (wrong field, wrong step, wrong graph, bad path).
struct StructuralError : Error {
    using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
struct ContractViolation : Error {
    using Error::Error;
};

/// An identity that must hold failed; indicates a bug, never expected input.
struct InvariantViolation : Error {
    using Error::Error;
};

} // namespace grlpa
