#pragma once

#include <stdexcept>
#include <string>

namespace quadres {

/// Malformed user input: bad ring spec, invalid initial label, out-of-range
/// configuration, unparseable files. The CLI maps this family to exit code 2.
struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FieldMismatchError : InvalidInputError {
    explicit FieldMismatchError(const std::string& msg) : InvalidInputError(msg) {}
};

/// The parity system for a new level of edges has no solution (odd cycle of
/// diamond constraints). Carries a printable description of the offending
/// cycle. The CLI maps this to exit code 3.
struct SignConflictError : std::runtime_error {
    std::string cycle;
    SignConflictError(const std::string& msg, std::string cycle_desc)
        : std::runtime_error(msg), cycle(std::move(cycle_desc)) {}
};

/// A postcondition that should hold for every construction failed: either a
/// bug or an anomaly worth a reproducible report. CLI exit code 3.
struct InternalConsistencyError : std::runtime_error {
    explicit InternalConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace quadres
