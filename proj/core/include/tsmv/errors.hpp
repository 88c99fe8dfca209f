#pragma once

#include <stdexcept>

namespace tsmv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid caller-supplied data: dimension mismatches, bad hyperparameters.
struct InputError : Error {
  using Error::Error;
};

// Malformed file or stream contents; the message carries the line number.
struct ParseError : Error {
  using Error::Error;
};

// Solver trouble: launch failures, protocol violations, claimed models
// that do not satisfy the formula.
struct SolverError : Error {
  using Error::Error;
};

// An exhaustive-enumeration request too large to run.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace tsmv
