#pragma once

#include <stdexcept>
#include <string>

namespace sepdraw {

/// Malformed or out-of-contract input: bad files, unknown ids, degenerate geometry.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No object satisfying the requested constraints exists (or none within budget).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An independent verifier rejected a produced result.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sepdraw
