#pragma once

#include <stdexcept>

namespace z4codes {

// An arithmetic or bookkeeping invariant broke; always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A request the closed forms do not cover (even m, m too small, mixed parity).
class OutOfTheoremScope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EvenM : public OutOfTheoremScope {
 public:
  using OutOfTheoremScope::OutOfTheoremScope;
};

class EmptyDefiningSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroCode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IdentityViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace z4codes
