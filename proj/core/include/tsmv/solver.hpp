#pragma once

#include <cstdint>
#include <string>

#include "tsmv/assignment.hpp"
#include "tsmv/cnf.hpp"

namespace tsmv {

struct SolveBudget {
  // Wall-clock limit in seconds; negative means unlimited, zero expires
  // immediately (useful to force a Timeout outcome deterministically).
  double timeout_s = -1.0;
  // Conflict cap for the embedded solver; negative means unlimited.
  int64_t conflict_limit = -1;

  bool has_deadline() const { return timeout_s >= 0.0; }
};

enum class SolveStatus { Sat, Unsat, Timeout };

struct SolveResult {
  SolveStatus status = SolveStatus::Timeout;
  Assignment assignment;  // total over 1..var_count when Sat
  int64_t decisions = 0;
  int64_t conflicts = 0;
  int64_t propagations = 0;
  double wall_time_s = 0.0;
};

struct SolverOptions {
  // Branching is lowest unassigned id, positive phase first, which keeps
  // runs reproducible. The heuristics below trade that order for speed and
  // stay off unless requested.
  bool use_vsids = false;
  bool use_restarts = false;
};

// Complete search: unit propagation, first-UIP clause learning, backjumping.
// Returns Sat with a model that has been checked against every clause,
// Unsat, or Timeout when the budget runs out.
SolveResult solve_embedded(const Cnf& cnf, const SolveBudget& budget = {},
                           const SolverOptions& opts = {});

// Which solver to use for a query.
struct SolverSpec {
  enum class Kind { Embedded, External };
  Kind kind = Kind::Embedded;
  std::string command;  // external launch command line
};

// "embedded" or "exec:<command>"; anything else throws InputError.
SolverSpec parse_solver_spec(const std::string& text);

// Runs the external command on a DIMACS temp file, parses competition-style
// output, and re-verifies any claimed model against the clauses. Timeout
// terminates the process. Launch failures and protocol violations throw
// SolverError.
SolveResult solve_external(const Cnf& cnf, const std::string& command,
                           const SolveBudget& budget = {});

SolveResult solve_cnf(const Cnf& cnf, const SolverSpec& spec,
                      const SolveBudget& budget = {});

}  // namespace tsmv
