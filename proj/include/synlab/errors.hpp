#pragma once

#include <stdexcept>
#include <string>

namespace synlab {

/// Malformed input: bad tables, unknown ids, shape mismatches, exceeded caps.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation declined because its precondition failed on the data; the
/// message carries the witnessing instance.
class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace synlab
