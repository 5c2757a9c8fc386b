#pragma once

#include <stdexcept>

namespace schur {

// Violated mathematical precondition (non-dominant input, breadth too large,
// rank/degree mismatch, ...). The CLI maps this to its own exit code so
// callers can tell bad inputs from genuine failures.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace schur
