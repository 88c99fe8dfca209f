#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsmv/verify.hpp"

namespace tsmv {

// One verification query, flattened for reporting. epsilon < 0 and eta < 0
// mean "not applicable to this property".
struct InstanceRecord {
  int index = 0;
  std::string property;
  std::string result;
  int epsilon = -1;
  double eta = -1.0;
  double time_s = 0.0;
  int vars = 0;
  int clauses = 0;
  std::optional<std::string> counterexample_bits;
};

InstanceRecord make_record(const Verdict& v, int index, int epsilon = -1,
                           double eta = -1.0);

// "[3] robustness eps=1: FAILS ..." — one line, human-oriented.
// deterministic suppresses the timing field so identical runs produce
// identical bytes.
std::string record_text(const InstanceRecord& r, bool deterministic = false);

// The same record as a single-line JSON object with fixed key order:
// property, result, index, epsilon, eta, time_s, vars, clauses,
// counterexample_bits. Inapplicable fields are null.
std::string record_json(const InstanceRecord& r, bool deterministic = false);

// One row of the result table: how many instances the solver finished within
// budget, and how many of those were found robust.
struct SummaryRow {
  int epsilon = 0;
  int total = 0;
  int solved = 0;
  int robust = 0;
  double avg_time_s = 0.0;  // over solved instances
  double budget_s = -1.0;   // per-instance budget, for the no-solved case
};

SummaryRow summarize(const std::vector<Verdict>& verdicts, int epsilon,
                     double budget_s = -1.0);

// Fixed-width table, one row per epsilon:
//   eps  solved  eps-robust  time (sec)
std::string render_summary_table(const std::vector<SummaryRow>& rows,
                                 bool deterministic = false);

}  // namespace tsmv
