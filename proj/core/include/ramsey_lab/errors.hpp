#pragma once

#include <stdexcept>
#include <string>

namespace ramsey_lab {

// A precondition on caller-supplied arguments was violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search was asked to run past its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No density satisfies the requested constraint.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ramsey_lab
