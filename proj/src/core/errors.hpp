#pragma once

#include <stdexcept>
#include <string>

namespace saacbr {

// Error taxonomy used across the library. The C API maps each type to a
// status code; the CLI maps them to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File could not be opened or read.
struct IoError : Error {
    using Error::Error;
};

// Input text is syntactically malformed (CSV cell, JSON shape, flag value).
struct ParseError : Error {
    using Error::Error;
};

// Input is well-formed but violates a casebase invariant (label alphabet,
// duplicate ids, missing complement outcome).
struct DataError : Error {
    using Error::Error;
};

// Inconsistent model configuration (e.g. secondary attacks without supports).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace saacbr
