#pragma once

#include <stdexcept>
#include <string>

namespace jameslab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration was asked to run past its configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// Malformed or inconsistent configuration (specs, weights, flags).
struct ConfigError : Error {
    using Error::Error;
};

/// A vector extends past the capacity the construction parameters provide.
struct InsufficientParams : Error {
    using Error::Error;
};

/// CountVec multiplicities exceed a block capacity.
struct CapacityError : Error {
    using Error::Error;
};

} // namespace jameslab
