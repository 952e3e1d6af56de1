#pragma once

#include <stdexcept>
#include <string>

namespace classdist {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input document (group spec, cycle notation).
struct ParseError : Error {
  using Error::Error;
};

/// Structural precondition violated: H not a subgroup, H not normal,
/// quotient not cyclic.
struct HypothesisError : Error {
  using Error::Error;
};

/// Resource cap exceeded (group enumeration past the configured limit).
struct LimitError : Error {
  using Error::Error;
};

/// Argument outside an operation's domain (n = 0, i not dividing j, ...).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace classdist
