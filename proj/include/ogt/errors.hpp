#pragma once

#include <stdexcept>
#include <string>

namespace ogt {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside the supported size range (vertex cap, census cap, search guard).
struct CapExceeded : Error {
  using Error::Error;
};

// Structurally invalid input: self-loop, antisymmetry violation, index out of
// range, malformed format string, bad parameter combination.
struct InvalidInput : Error {
  using Error::Error;
};

// Operation defined only for acyclic inputs (e.g. tau of a cyclic graph is
// infinite and reported through this error, not as a value).
struct CyclicInput : Error {
  using Error::Error;
};

}  // namespace ogt
