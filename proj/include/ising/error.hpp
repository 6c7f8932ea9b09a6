#pragma once

#include <stdexcept>
#include <string>

namespace ising {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid numeric parameter (negative degree, out-of-range vertex, ...).
struct ParameterError : Error {
  using Error::Error;
};

// Instance too large for an exhaustive routine.
struct SizeError : Error {
  using Error::Error;
};

// Exploration budget exhausted (path DFS, SAW tree construction).
struct BudgetError : Error {
  using Error::Error;
};

// Caller broke a precondition such as updating a pinned vertex.
struct ContractViolation : Error {
  using Error::Error;
};

// Conditioning event has zero probability.
struct ConditioningError : Error {
  using Error::Error;
};

// An internal invariant (e.g. the monotone sandwich) was observed broken.
struct InvariantFailure : Error {
  using Error::Error;
};

}  // namespace ising
