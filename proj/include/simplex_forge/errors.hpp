#ifndef SIMPLEX_FORGE_ERRORS_HPP
#define SIMPLEX_FORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simplex_forge {

/// Malformed input: empty simplex, non-positive label, bad document, ...
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A simplex was passed that is not an element of the host complex.
class NotAnElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set of simplices that was required to be closed under taking faces is not.
class NotSubsetClosed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input exceeds a configured element-count ceiling.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with an input that violates its stated precondition
/// (e.g. the Euler gem check on something that is not a sphere).
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two independent computations of the same quantity disagreed.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace simplex_forge

#endif
