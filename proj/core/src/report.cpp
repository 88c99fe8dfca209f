#include "tsmv/report.hpp"

#include <cstdio>
#include <sstream>

namespace tsmv {

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

InstanceRecord make_record(const Verdict& v, int index, int epsilon,
                           double eta) {
  InstanceRecord r;
  r.index = index;
  r.property = property_name(v.property);
  r.result = check_result_name(v.result);
  r.epsilon = epsilon;
  r.eta = eta;
  r.time_s = v.solve_time_s;
  r.vars = v.vars;
  r.clauses = v.clauses;
  if (v.counterexample) {
    r.counterexample_bits = bits_to_string(*v.counterexample);
  }
  return r;
}

std::string record_text(const InstanceRecord& r, bool deterministic) {
  std::ostringstream out;
  out << "[" << r.index << "] " << r.property;
  if (r.epsilon >= 0) out << " eps=" << r.epsilon;
  out << ": " << r.result;
  if (r.counterexample_bits) out << " witness=" << *r.counterexample_bits;
  if (!deterministic) out << " time=" << fixed2(r.time_s) << "s";
  out << " vars=" << r.vars << " clauses=" << r.clauses;
  return out.str();
}

std::string record_json(const InstanceRecord& r, bool deterministic) {
  std::ostringstream out;
  out << "{\"property\":\"" << r.property << "\"";
  out << ",\"result\":\"" << r.result << "\"";
  out << ",\"index\":" << r.index;
  if (r.epsilon >= 0) out << ",\"epsilon\":" << r.epsilon;
  else out << ",\"epsilon\":null";
  if (r.eta >= 0) out << ",\"eta\":" << fixed6(r.eta);
  else out << ",\"eta\":null";
  out << ",\"time_s\":" << fixed6(deterministic ? 0.0 : r.time_s);
  out << ",\"vars\":" << r.vars;
  out << ",\"clauses\":" << r.clauses;
  if (r.counterexample_bits) {
    out << ",\"counterexample_bits\":\"" << *r.counterexample_bits << "\"";
  } else {
    out << ",\"counterexample_bits\":null";
  }
  out << "}";
  return out.str();
}

SummaryRow summarize(const std::vector<Verdict>& verdicts, int epsilon,
                     double budget_s) {
  SummaryRow row;
  row.epsilon = epsilon;
  row.total = static_cast<int>(verdicts.size());
  row.budget_s = budget_s;
  double time_sum = 0.0;
  for (const Verdict& v : verdicts) {
    if (v.result == CheckResult::Timeout) continue;
    ++row.solved;
    time_sum += v.solve_time_s;
    if (v.result == CheckResult::Holds) ++row.robust;
  }
  if (row.solved > 0) row.avg_time_s = time_sum / row.solved;
  return row;
}

std::string render_summary_table(const std::vector<SummaryRow>& rows,
                                 bool deterministic) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof(line), "%-5s %-7s %-11s %s\n", "eps", "solved",
                "eps-robust", "time (sec)");
  out << line;
  for (const SummaryRow& r : rows) {
    std::string time_cell;
    if (deterministic) {
      time_cell = "-";
    } else if (r.solved == 0) {
      time_cell = r.budget_s >= 0 ? ">= " + fixed2(r.budget_s) : "-";
    } else {
      time_cell = fixed2(r.avg_time_s);
    }
    std::snprintf(line, sizeof(line), "%-5d %-7d %-11d %s\n", r.epsilon,
                  r.solved, r.robust, time_cell.c_str());
    out << line;
  }
  return out.str();
}

}  // namespace tsmv
