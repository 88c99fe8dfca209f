#pragma once

#include "tsmv/cnf.hpp"
#include "tsmv/formula.hpp"
#include "tsmv/varpool.hpp"

namespace tsmv {

struct TseitinResult {
  Cnf cnf;
  int root = 0;  // assert this var to assert the formula
};

// Definitional clause form sharing the pool's variable numbering: every
// non-trivial subformula gets a definition variable (tagged "ts:<k>"), input
// variables keep their ids. Cnf plus the root unit is equisatisfiable with
// the formula: any model of it restricts to a model of the formula, and any
// model of the formula extends to one of it. Implies/Iff get their clause
// forms directly, negation just flips the subformula literal.
TseitinResult tseitin(const FormulaRef& f, VarPool& pool);

}  // namespace tsmv
