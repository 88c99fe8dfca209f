#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsmv/bitinput.hpp"
#include "tsmv/encode.hpp"
#include "tsmv/formula.hpp"
#include "tsmv/model.hpp"
#include "tsmv/solver.hpp"
#include "tsmv/varpool.hpp"

namespace tsmv {

enum class Property { Robustness, Equivalence, Similarity };
std::string property_name(Property p);

enum class CheckResult { Holds, Fails, Timeout };
std::string check_result_name(CheckResult r);

// Outcome of one SAT query about a model (or a pair of models).
struct Verdict {
  Property property = Property::Robustness;
  CheckResult result = CheckResult::Timeout;
  // The perturbed/distinguishing input, present exactly on Fails. Always
  // re-validated against the model(s) by direct evaluation before being
  // returned.
  std::optional<BitInput> counterexample;
  double solve_time_s = 0.0;
  int vars = 0;
  int clauses = 0;
};

enum class UniversalResult { Holds, Fails, Inconclusive };
std::string universal_result_name(UniversalResult r);

// Aggregate over a set of inputs: holds when at least ceil-free floor(eta*|S|)
// of them pass their per-input check. Timeouts leave the outcome open unless
// the comparison is already settled either way.
struct UniversalVerdict {
  std::vector<Verdict> instances;
  int robust_count = 0;
  int timeout_count = 0;
  int threshold = 0;
  UniversalResult result = UniversalResult::Inconclusive;
};

// Satisfiable exactly when some input within Hamming distance eps of `input`
// is classified differently than `input` itself. Variables: "flip:l:<j>" for
// the flip selectors, "flip:sc:r:<i>:<j>" for their counter, then the machine
// encoding. With eps == n_vars the distance restriction disappears.
FormulaRef build_notrob(const TsmModel& m, const BitInput& input, int eps,
                        VarPool& pool);

// Satisfiable exactly when the two machines disagree on some input within
// Hamming distance eps of `input` (distance zero included, so agreement on
// `input` itself is part of the property).
FormulaRef build_notsim(const TsmModel& m1, const TsmModel& m2,
                        const BitInput& input, int eps, VarPool& pool);

Verdict check_robust(const TsmModel& m, const BitInput& input, int eps,
                     const SolverSpec& solver = {},
                     const SolveBudget& budget = {});

Verdict check_equivalence(const TsmModel& m1, const TsmModel& m2,
                          const SolverSpec& solver = {},
                          const SolveBudget& budget = {});

Verdict check_similar(const TsmModel& m1, const TsmModel& m2,
                      const BitInput& input, int eps,
                      const SolverSpec& solver = {},
                      const SolveBudget& budget = {});

// One independent query per element of S; the budget applies per instance.
// jobs > 1 runs the queries on that many threads; the outcome does not
// depend on scheduling.
UniversalVerdict check_universal_robust(const TsmModel& m,
                                        const std::vector<BitInput>& S,
                                        int eps, double eta,
                                        const SolverSpec& solver = {},
                                        const SolveBudget& budget = {},
                                        int jobs = 1);

UniversalVerdict check_universal_similar(const TsmModel& m1,
                                         const TsmModel& m2,
                                         const std::vector<BitInput>& S,
                                         int eps, double eta,
                                         const SolverSpec& solver = {},
                                         const SolveBudget& budget = {},
                                         int jobs = 1);

}  // namespace tsmv
