#pragma once

#include <stdexcept>
#include <string>

namespace abelmod {

/// Input that violates an operation's precondition (bad type/rank, malformed
/// polynomial, non-commuting pair, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap (group order, orbit size, search space) would be
/// exceeded. The message names the offending size.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (e.g. a group average that is not an
/// integer). Never a valid result.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace abelmod
