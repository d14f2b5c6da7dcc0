#pragma once

#include <stdexcept>

namespace gossip {

/// Malformed input: self-calls, person ids out of range, unparsable files.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside the range where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact integer arithmetic would overflow 64 bits.
class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A transform was requested whose applicability condition does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gossip
