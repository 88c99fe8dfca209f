#pragma once

#include <string>
#include <vector>

#include "tsmv/formula.hpp"
#include "tsmv/model.hpp"
#include "tsmv/solver.hpp"
#include "tsmv/varpool.hpp"

namespace tsmv {

// Propositional rendering of a machine's input/output behaviour. The formula
// is a flat conjunction of definitions: one variable per monomial, two
// sequential counters (one per polarity) over those variables, and an output
// block making output_var true exactly when the machine would answer 1.
struct TsmEncoding {
  FormulaRef formula;
  std::vector<int> input_vars;         // [i-1] holds the var for input i
  std::vector<int> neg_monomial_vars;  // class-0 monomial values
  std::vector<int> pos_monomial_vars;  // class-1 monomial values
  std::vector<int> output_step_vars;   // one comparison per count level
  int output_var = 0;
};

// Input variables are tagged "input:x:<i>" regardless of tag, so encoding two
// machines into one pool makes them read the same input. Everything else is
// namespaced under the tag (when nonempty), keeping the machines' internals
// apart.
TsmEncoding encode_tsm(const TsmModel& m, VarPool& pool,
                       const std::string& tag = "");

// Classifies by satisfiability instead of by counting: fixes the inputs,
// asserts the output, and asks the solver. Exists to cross-check the
// encoding against classify(); throws BudgetError if the solver gives up.
int classify_via_sat(const TsmModel& m, const BitInput& in,
                     const SolverSpec& spec = {},
                     const SolveBudget& budget = {});

}  // namespace tsmv
