// Command line front end: training, classification, CNF export, and the
// SAT-backed property checks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsmv/dataset.hpp"
#include "tsmv/dimacs.hpp"
#include "tsmv/encode.hpp"
#include "tsmv/errors.hpp"
#include "tsmv/model_io.hpp"
#include "tsmv/report.hpp"
#include "tsmv/train.hpp"
#include "tsmv/tseitin.hpp"
#include "tsmv/verify.hpp"

namespace {

using namespace tsmv;

// Shared flags of the verification subcommands.
struct VerifyOpts {
  std::string solver_text;
  double timeout_s = 300.0;
  int jobs = 1;
  std::string report_path;
  bool deterministic = false;
};

void add_verify_opts(CLI::App* cmd, VerifyOpts& o) {
  const char* env = std::getenv("TSM_SOLVER");
  o.solver_text = env && *env ? env : "embedded";
  cmd->add_option("--solver", o.solver_text,
                  "'embedded' or 'exec:<command>' (default from TSM_SOLVER)");
  cmd->add_option("--timeout", o.timeout_s,
                  "per-instance solver budget in seconds");
  cmd->add_option("--jobs", o.jobs, "parallel instance checks");
  cmd->add_option("--report", o.report_path, "write JSON records to this file");
  cmd->add_flag("--deterministic", o.deterministic,
                "suppress timing fields in output");
}

SolveBudget budget_of(const VerifyOpts& o) {
  SolveBudget b;
  b.timeout_s = o.timeout_s;
  return b;
}

// Inputs for per-instance checks: explicit bit strings and/or a CSV file.
struct InputArgs {
  std::vector<std::string> bit_strings;
  std::string file;
};

void add_input_opts(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("--input", in.bit_strings,
                  "input as a bit string, e.g. 0101 (repeatable)");
  cmd->add_option("--input-file", in.file,
                  "binary CSV of inputs (label column ignored)");
}

std::vector<BitInput> collect_inputs(const InputArgs& in) {
  std::vector<BitInput> out;
  for (const std::string& s : in.bit_strings) {
    out.push_back(bits_from_string(s));
  }
  if (!in.file.empty()) {
    Dataset ds = load_binary_csv(in.file);
    out.insert(out.end(), ds.begin(), ds.end());
  }
  if (out.empty()) {
    throw InputError("no inputs given; use --input or --input-file");
  }
  return out;
}

class ReportSink {
 public:
  ReportSink(const std::string& path, bool deterministic)
      : deterministic_(deterministic) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write " + path);
    }
  }

  void record(const InstanceRecord& r) {
    std::cout << record_text(r, deterministic_) << "\n";
    if (file_.is_open()) file_ << record_json(r, deterministic_) << "\n";
  }

  void line(const std::string& s) { std::cout << s << "\n"; }

 private:
  bool deterministic_;
  std::ofstream file_;
};

// 0 all HOLDS, 1 any FAILS, 2 timeouts/inconclusive but nothing failed.
class ExitTracker {
 public:
  void see(CheckResult r) {
    if (r == CheckResult::Fails) failed_ = true;
    if (r == CheckResult::Timeout) open_ = true;
  }
  void see(UniversalResult r) {
    if (r == UniversalResult::Fails) failed_ = true;
    if (r == UniversalResult::Inconclusive) open_ = true;
  }
  int code() const { return failed_ ? 1 : (open_ ? 2 : 0); }

 private:
  bool failed_ = false;
  bool open_ = false;
};

int cmd_train(const std::string& data_path, const TrainConfig& cfg,
              const std::string& out_path) {
  Dataset ds = load_binary_csv(data_path);
  TsmModel m = train(ds, cfg);
  double acc = accuracy(m, ds);
  save_model(m, out_path);
  std::cout << "trained on " << ds.size() << " examples, train accuracy "
            << acc << "\n";
  std::cout << "model written to " << out_path << "\n";
  return 0;
}

int cmd_classify(const std::string& model_path, const InputArgs& in) {
  TsmModel m = load_model(model_path);
  for (const BitInput& x : collect_inputs(in)) {
    std::cout << classify(m, x) << "\n";
  }
  return 0;
}

int cmd_encode(const std::string& model_path, const std::string& out_path) {
  TsmModel m = load_model(model_path);
  VarPool pool;
  TsmEncoding enc = encode_tsm(m, pool);
  TseitinResult t = tseitin(enc.formula, pool);
  t.cnf.add_clause({t.root});

  std::ostringstream head;
  head << "c machine encoding: " << m.n_vars << " inputs, "
       << m.n_monomials() << " monomials\n";
  head << "c inputs are variables 1.." << m.n_vars << "\n";
  head << "c output variable: " << enc.output_var << "\n";
  head << "c asserting the last unit clause selects the formula root\n";

  const std::string text = head.str() + write_dimacs(t.cnf);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
    std::cout << "wrote " << t.cnf.var_count << " vars, "
              << t.cnf.clauses.size() << " clauses to " << out_path << "\n";
  }
  return 0;
}

int cmd_verify_robust(const std::string& model_path, const InputArgs& in,
                      const std::vector<int>& eps_list, const VerifyOpts& o,
                      std::optional<double> eta) {
  TsmModel m = load_model(model_path);
  std::vector<BitInput> inputs = collect_inputs(in);
  SolverSpec spec = parse_solver_spec(o.solver_text);
  ReportSink sink(o.report_path, o.deterministic);
  ExitTracker exit_code;

  std::vector<SummaryRow> rows;
  for (int eps : eps_list) {
    UniversalVerdict uv = check_universal_robust(
        m, inputs, eps, eta.value_or(1.0), spec, budget_of(o), o.jobs);
    for (size_t i = 0; i < uv.instances.size(); ++i) {
      sink.record(make_record(uv.instances[i], static_cast<int>(i), eps,
                              eta.value_or(-1.0)));
      if (!eta) exit_code.see(uv.instances[i].result);
    }
    rows.push_back(summarize(uv.instances, eps, o.timeout_s));
    if (eta) {
      sink.line("eps=" + std::to_string(eps) +
                ": " + universal_result_name(uv.result) + " (robust " +
                std::to_string(uv.robust_count) + "/" +
                std::to_string(uv.instances.size()) + ", threshold " +
                std::to_string(uv.threshold) + ")");
      exit_code.see(uv.result);
    }
  }
  sink.line("");
  sink.line(render_summary_table(rows, o.deterministic));
  return exit_code.code();
}

int cmd_verify_equiv(const std::string& path_a, const std::string& path_b,
                     const VerifyOpts& o) {
  TsmModel a = load_model(path_a);
  TsmModel b = load_model(path_b);
  SolverSpec spec = parse_solver_spec(o.solver_text);
  ReportSink sink(o.report_path, o.deterministic);

  Verdict v = check_equivalence(a, b, spec, budget_of(o));
  sink.record(make_record(v, 0));
  ExitTracker exit_code;
  exit_code.see(v.result);
  return exit_code.code();
}

int cmd_verify_sim(const std::string& path_a, const std::string& path_b,
                   const InputArgs& in, const std::vector<int>& eps_list,
                   const VerifyOpts& o, std::optional<double> eta) {
  TsmModel a = load_model(path_a);
  TsmModel b = load_model(path_b);
  std::vector<BitInput> inputs = collect_inputs(in);
  SolverSpec spec = parse_solver_spec(o.solver_text);
  ReportSink sink(o.report_path, o.deterministic);
  ExitTracker exit_code;

  std::vector<SummaryRow> rows;
  for (int eps : eps_list) {
    UniversalVerdict uv = check_universal_similar(
        a, b, inputs, eps, eta.value_or(1.0), spec, budget_of(o), o.jobs);
    for (size_t i = 0; i < uv.instances.size(); ++i) {
      sink.record(make_record(uv.instances[i], static_cast<int>(i), eps,
                              eta.value_or(-1.0)));
      if (!eta) exit_code.see(uv.instances[i].result);
    }
    rows.push_back(summarize(uv.instances, eps, o.timeout_s));
    if (eta) {
      sink.line("eps=" + std::to_string(eps) +
                ": " + universal_result_name(uv.result) + " (similar " +
                std::to_string(uv.robust_count) + "/" +
                std::to_string(uv.instances.size()) + ", threshold " +
                std::to_string(uv.threshold) + ")");
      exit_code.see(uv.result);
    }
  }
  sink.line("");
  sink.line(render_summary_table(rows, o.deterministic));
  return exit_code.code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tsetlin machine training and SAT-based property checking"};
  app.require_subcommand(1);

  // train
  auto* train_cmd = app.add_subcommand("train", "train a binary machine");
  std::string data_path, model_out = "model.tsm";
  TrainConfig tcfg;
  tcfg.n_monomials = 100;
  tcfg.num_states = 256;
  tcfg.margin = 15;
  tcfg.specificity = 5.0;
  tcfg.epochs = 30;
  tcfg.seed = 1;
  train_cmd->add_option("--data", data_path, "training CSV")->required();
  train_cmd->add_option("--monomials", tcfg.n_monomials, "total monomials");
  train_cmd->add_option("--states", tcfg.num_states, "automaton states per action");
  train_cmd->add_option("--margin", tcfg.margin, "vote clipping bound");
  train_cmd->add_option("--specificity", tcfg.specificity, "specificity s");
  train_cmd->add_option("--epochs", tcfg.epochs, "training epochs");
  train_cmd->add_option("--seed", tcfg.seed, "RNG seed");
  train_cmd->add_option("--out", model_out, "model output path");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify inputs");
  std::string classify_model;
  InputArgs classify_in;
  classify_cmd->add_option("--model", classify_model)->required();
  add_input_opts(classify_cmd, classify_in);

  // encode
  auto* encode_cmd =
      app.add_subcommand("encode", "export the machine's CNF encoding");
  std::string encode_model, encode_out = "-";
  encode_cmd->add_option("--model", encode_model)->required();
  encode_cmd->add_option("--out", encode_out, "DIMACS path, '-' for stdout");

  // verify-robust / verify-unirob
  auto* rob_cmd =
      app.add_subcommand("verify-robust", "per-input flip robustness");
  std::string rob_model;
  InputArgs rob_in;
  std::vector<int> rob_eps{1};
  VerifyOpts rob_opts;
  rob_cmd->add_option("--model", rob_model)->required();
  add_input_opts(rob_cmd, rob_in);
  rob_cmd->add_option("--eps", rob_eps, "flip budgets (repeatable)");
  add_verify_opts(rob_cmd, rob_opts);

  auto* unirob_cmd = app.add_subcommand(
      "verify-unirob", "robustness over a fraction of an input set");
  std::string unirob_model;
  InputArgs unirob_in;
  std::vector<int> unirob_eps{1};
  double unirob_eta = 1.0;
  VerifyOpts unirob_opts;
  unirob_cmd->add_option("--model", unirob_model)->required();
  add_input_opts(unirob_cmd, unirob_in);
  unirob_cmd->add_option("--eps", unirob_eps, "flip budgets (repeatable)");
  unirob_cmd->add_option("--eta", unirob_eta, "required robust fraction")
      ->required();
  add_verify_opts(unirob_cmd, unirob_opts);

  // verify-equiv
  auto* equiv_cmd =
      app.add_subcommand("verify-equiv", "full input-space agreement");
  std::string equiv_a, equiv_b;
  VerifyOpts equiv_opts;
  equiv_cmd->add_option("--model-a", equiv_a)->required();
  equiv_cmd->add_option("--model-b", equiv_b)->required();
  add_verify_opts(equiv_cmd, equiv_opts);

  // verify-sim / verify-unisim
  auto* sim_cmd = app.add_subcommand(
      "verify-sim", "agreement around given inputs");
  std::string sim_a, sim_b;
  InputArgs sim_in;
  std::vector<int> sim_eps{1};
  VerifyOpts sim_opts;
  sim_cmd->add_option("--model-a", sim_a)->required();
  sim_cmd->add_option("--model-b", sim_b)->required();
  add_input_opts(sim_cmd, sim_in);
  sim_cmd->add_option("--eps", sim_eps, "flip budgets (repeatable)");
  add_verify_opts(sim_cmd, sim_opts);

  auto* unisim_cmd = app.add_subcommand(
      "verify-unisim", "agreement over a fraction of an input set");
  std::string unisim_a, unisim_b;
  InputArgs unisim_in;
  std::vector<int> unisim_eps{1};
  double unisim_eta = 1.0;
  VerifyOpts unisim_opts;
  unisim_cmd->add_option("--model-a", unisim_a)->required();
  unisim_cmd->add_option("--model-b", unisim_b)->required();
  add_input_opts(unisim_cmd, unisim_in);
  unisim_cmd->add_option("--eps", unisim_eps, "flip budgets (repeatable)");
  unisim_cmd->add_option("--eta", unisim_eta, "required similar fraction")
      ->required();
  add_verify_opts(unisim_cmd, unisim_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (train_cmd->parsed()) return cmd_train(data_path, tcfg, model_out);
    if (classify_cmd->parsed()) return cmd_classify(classify_model, classify_in);
    if (encode_cmd->parsed()) return cmd_encode(encode_model, encode_out);
    if (rob_cmd->parsed()) {
      return cmd_verify_robust(rob_model, rob_in, rob_eps, rob_opts, {});
    }
    if (unirob_cmd->parsed()) {
      return cmd_verify_robust(unirob_model, unirob_in, unirob_eps,
                               unirob_opts, unirob_eta);
    }
    if (equiv_cmd->parsed()) return cmd_verify_equiv(equiv_a, equiv_b, equiv_opts);
    if (sim_cmd->parsed()) {
      return cmd_verify_sim(sim_a, sim_b, sim_in, sim_eps, sim_opts, {});
    }
    if (unisim_cmd->parsed()) {
      return cmd_verify_sim(unisim_a, unisim_b, unisim_in, unisim_eps,
                            unisim_opts, unisim_eta);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
