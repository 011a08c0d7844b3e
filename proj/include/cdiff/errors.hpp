#pragma once

#include <stdexcept>
#include <string>

namespace cdiff {

// Precondition violations on user-supplied parameters. The CLI maps these to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request outside the supported case analysis (c = 1, or a formula set that needs eta(-1) = 1).
class UnsupportedCase : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inverse of zero") {}
};

// Two routes that must agree did not. Indicates a bug, never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cdiff
