#pragma once

#include <stdexcept>
#include <string>

namespace qbc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File missing, unreadable, or truncated.
struct IoError : Error {
    using Error::Error;
};

// File readable but not a format we accept.
struct FormatError : Error {
    using Error::Error;
};

// Mismatched or misaligned dimensions.
struct DimensionError : Error {
    using Error::Error;
};

// Bad run configuration or arguments.
struct ConfigError : Error {
    using Error::Error;
};

// Simulator constraint violated (qubit budget, ambiguous readout, ...).
struct SimError : Error {
    using Error::Error;
};

}  // namespace qbc
