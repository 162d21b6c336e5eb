#pragma once

#include <stdexcept>
#include <string>

namespace decidua {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Objects of two maps do not line up (composition, comparison, copairing).
struct ObjectMismatchError : Error {
  using Error::Error;
};

// A map does not have the shape an operation requires, e.g. a codomain that
// is not a binary sum, or a candidate that fails the decision tagging check.
struct ShapeError : Error {
  using Error::Error;
};

// Exhaustive enumeration was asked for objects larger than the supported cap.
struct CapExceededError : Error {
  using Error::Error;
};

struct UnknownSuiteError : Error {
  using Error::Error;
};

struct UnboundVariableError : Error {
  using Error::Error;
};

struct ElementNotInCarrierError : Error {
  using Error::Error;
};

struct JsonFormatError : Error {
  using Error::Error;
};

// A constructor was handed data violating a structural invariant.
struct InvariantError : Error {
  using Error::Error;
};

}  // namespace decidua
