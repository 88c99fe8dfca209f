#pragma once

#include <optional>

#include "tsmv/bitinput.hpp"
#include "tsmv/model.hpp"

namespace tsmv {

// Ground truth by enumeration, for cross-checking the SAT-based procedures.
// These touch classify() only — none of the encoding machinery.
struct OracleVerdict {
  bool holds = false;
  std::optional<BitInput> counterexample;
};

// Enumerates every input within Hamming distance eps of `input` (the input
// itself included) and reports the first one classified differently.
// Neighbourhoods beyond 10^6 points are refused.
OracleVerdict brute_oracle_robust(const TsmModel& m, const BitInput& input,
                                  int eps);

// Same enumeration, but looks for a disagreement between the two machines.
OracleVerdict brute_oracle_similar(const TsmModel& m1, const TsmModel& m2,
                                   const BitInput& input, int eps);

// Walks all 2^n inputs (n <= 20) for a disagreement.
OracleVerdict brute_oracle_equiv(const TsmModel& m1, const TsmModel& m2);

}  // namespace tsmv
