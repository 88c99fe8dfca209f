#pragma once

#include <string>
#include <vector>

#include "tsmv/formula.hpp"
#include "tsmv/varpool.hpp"

namespace tsmv {

// Sequential counter for "at least K of the given formulas hold". The
// returned conjunction defines register variables r[i][j] (0-based indices
// here, variable tags use the 1-based positions) such that in any satisfying
// assignment r[i][j] holds exactly when at least j+1 of the first i+1 inputs
// do. threshold_var is r[l-1][K-1].
struct SeqCounterEncoding {
  FormulaRef formula;
  std::vector<std::vector<int>> r;
  int threshold_var = 0;

  // The definitional conjuncts in emission order; formula is their And.
  std::vector<FormulaRef> conjuncts;
};

// lits must be nonempty and K >= 1. K may exceed the input count, in which
// case the registers of the overshooting columns are forced false.
SeqCounterEncoding seq_counter(const std::vector<FormulaRef>& lits, int K,
                               VarPool& pool, const std::string& tag);

}  // namespace tsmv
