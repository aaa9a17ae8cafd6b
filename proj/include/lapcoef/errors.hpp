#pragma once

#include <stdexcept>
#include <string>

namespace lapcoef {

/// Malformed graph, family parameters or CLI input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or size guard was exceeded. Never silently truncated.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The numeric eigensolver hit its sweep cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold by construction was violated.
/// Seeing one of these means there is a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lapcoef
