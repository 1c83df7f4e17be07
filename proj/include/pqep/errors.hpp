#pragma once

#include <stdexcept>
#include <string>

namespace pqep {

/// Base class for all pqep errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (CSV/JSON). Carries a 1-based line number when known.
struct ParseError : Error {
    explicit ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_number(line) {}
    int line_number = 0;
};

/// A value violates a domain invariant (non-positive size, bad tolerance, ...).
struct ValueError : Error {
    using Error::Error;
};

/// Missing or inconsistent platform scaling data.
struct ConfigError : Error {
    using Error::Error;
};

/// Records cannot be combined (e.g. hybrid of a KEM and a signature).
struct CompositionError : Error {
    using Error::Error;
};

} // namespace pqep
