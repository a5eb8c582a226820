#pragma once

#include <stdexcept>
#include <string>

namespace icosa {

/// Malformed or unsupported input (bad ring descriptor, schema violation, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A mathematical check that was expected to hold failed.
struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace icosa
