#include "tsmv/verify.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "tsmv/errors.hpp"
#include "tsmv/seq_counter.hpp"
#include "tsmv/tseitin.hpp"

namespace tsmv {

std::string property_name(Property p) {
  switch (p) {
    case Property::Robustness: return "robustness";
    case Property::Equivalence: return "equivalence";
    case Property::Similarity: return "similarity";
  }
  return "?";
}

std::string check_result_name(CheckResult r) {
  switch (r) {
    case CheckResult::Holds: return "HOLDS";
    case CheckResult::Fails: return "FAILS";
    case CheckResult::Timeout: return "TIMEOUT";
  }
  return "?";
}

std::string universal_result_name(UniversalResult r) {
  switch (r) {
    case UniversalResult::Holds: return "HOLDS";
    case UniversalResult::Fails: return "FAILS";
    case UniversalResult::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

void append_conjuncts(std::vector<FormulaRef>& out, const FormulaRef& f) {
  if (f->kind() == Formula::Kind::And) {
    out.insert(out.end(), f->kids().begin(), f->kids().end());
  } else {
    out.push_back(f);
  }
}

void check_flip_args(const TsmModel& m, const BitInput& input, int eps) {
  m.validate();
  if (static_cast<int>(input.bits.size()) != m.n_vars) {
    throw InputError("input width does not match the model");
  }
  if (eps < 0 || eps > m.n_vars) {
    throw InputError("flip budget must be in [0, n]");
  }
}

// The flip selectors, their cardinality bound, and the definitions tying the
// machine's inputs to the (possibly flipped) base input. Returns the
// conjuncts in order; the machine encodings are appended by the callers.
std::vector<FormulaRef> flip_block(const BitInput& input, int eps,
                                   VarPool& pool) {
  const int n = static_cast<int>(input.bits.size());
  std::vector<FormulaRef> flips;
  flips.reserve(n);
  for (int j = 1; j <= n; ++j) {
    flips.push_back(mk_var(pool.var("flip:l:" + std::to_string(j))));
  }

  std::vector<FormulaRef> conjuncts;
  if (eps + 1 <= n) {
    // "No eps+1 flips" said positively: the counter registers are defined as
    // usual and the threshold register is forced off. Negating the whole
    // definitional conjunction instead would let the registers float free.
    SeqCounterEncoding c = seq_counter(flips, eps + 1, pool, "flip:sc");
    conjuncts = c.conjuncts;
    conjuncts.push_back(mk_not(mk_var(c.threshold_var)));
  }

  for (int j = 1; j <= n; ++j) {
    FormulaRef x = mk_var(pool.var("input:x:" + std::to_string(j)));
    FormulaRef base = mk_const(input.bits[j - 1] != 0);
    // x_j = input_j xor l_j; the constant folds the xor to l_j or ~l_j.
    FormulaRef flipped = mk_and(mk_or(base, flips[j - 1]),
                                mk_or(mk_not(base), mk_not(flips[j - 1])));
    conjuncts.push_back(mk_iff(x, flipped));
  }
  return conjuncts;
}

BitInput decode_input(const VarPool& pool, const Assignment& a, int n) {
  BitInput out;
  out.bits.resize(n);
  for (int j = 1; j <= n; ++j) {
    int id = pool.lookup("input:x:" + std::to_string(j));
    out.bits[j - 1] = a.value(id) ? 1 : 0;
  }
  return out;
}

struct QueryOutcome {
  SolveResult solve;
  int vars = 0;
  int clauses = 0;
};

QueryOutcome run_query(const FormulaRef& f, VarPool& pool,
                       const SolverSpec& solver, const SolveBudget& budget) {
  TseitinResult t = tseitin(f, pool);
  t.cnf.add_clause({t.root});
  QueryOutcome out;
  out.vars = t.cnf.var_count;
  out.clauses = static_cast<int>(t.cnf.clauses.size());
  out.solve = solve_cnf(t.cnf, solver, budget);
  return out;
}

}  // namespace

FormulaRef build_notrob(const TsmModel& m, const BitInput& input, int eps,
                        VarPool& pool) {
  check_flip_args(m, input, eps);
  std::vector<FormulaRef> conjuncts = flip_block(input, eps, pool);
  TsmEncoding enc = encode_tsm(m, pool);
  append_conjuncts(conjuncts, enc.formula);
  const bool label = classify(m, input) == 1;
  conjuncts.push_back(
      mk_iff(mk_const(label), mk_not(mk_var(enc.output_var))));
  return mk_and(std::move(conjuncts));
}

FormulaRef build_notsim(const TsmModel& m1, const TsmModel& m2,
                        const BitInput& input, int eps, VarPool& pool) {
  check_flip_args(m1, input, eps);
  m2.validate();
  if (m1.n_vars != m2.n_vars) {
    throw InputError("models have different input widths");
  }
  std::vector<FormulaRef> conjuncts = flip_block(input, eps, pool);
  TsmEncoding e1 = encode_tsm(m1, pool, "m1");
  TsmEncoding e2 = encode_tsm(m2, pool, "m2");
  append_conjuncts(conjuncts, e1.formula);
  append_conjuncts(conjuncts, e2.formula);
  conjuncts.push_back(
      mk_iff(mk_var(e1.output_var), mk_not(mk_var(e2.output_var))));
  return mk_and(std::move(conjuncts));
}

Verdict check_robust(const TsmModel& m, const BitInput& input, int eps,
                     const SolverSpec& solver, const SolveBudget& budget) {
  VarPool pool;
  FormulaRef f = build_notrob(m, input, eps, pool);
  QueryOutcome q = run_query(f, pool, solver, budget);

  Verdict v;
  v.property = Property::Robustness;
  v.vars = q.vars;
  v.clauses = q.clauses;
  v.solve_time_s = q.solve.wall_time_s;
  switch (q.solve.status) {
    case SolveStatus::Unsat:
      v.result = CheckResult::Holds;
      break;
    case SolveStatus::Timeout:
      v.result = CheckResult::Timeout;
      break;
    case SolveStatus::Sat: {
      BitInput j = decode_input(pool, q.solve.assignment, m.n_vars);
      if (hamming(input, j) > eps || classify(m, j) == classify(m, input)) {
        throw SolverError("robustness witness failed re-validation");
      }
      v.result = CheckResult::Fails;
      v.counterexample = std::move(j);
      break;
    }
  }
  return v;
}

Verdict check_equivalence(const TsmModel& m1, const TsmModel& m2,
                          const SolverSpec& solver, const SolveBudget& budget) {
  m1.validate();
  m2.validate();
  if (m1.n_vars != m2.n_vars) {
    throw InputError("models have different input widths");
  }
  VarPool pool;
  TsmEncoding e1 = encode_tsm(m1, pool, "m1");
  TsmEncoding e2 = encode_tsm(m2, pool, "m2");
  std::vector<FormulaRef> conjuncts;
  append_conjuncts(conjuncts, e1.formula);
  append_conjuncts(conjuncts, e2.formula);
  conjuncts.push_back(
      mk_iff(mk_var(e1.output_var), mk_not(mk_var(e2.output_var))));
  QueryOutcome q =
      run_query(mk_and(std::move(conjuncts)), pool, solver, budget);

  Verdict v;
  v.property = Property::Equivalence;
  v.vars = q.vars;
  v.clauses = q.clauses;
  v.solve_time_s = q.solve.wall_time_s;
  switch (q.solve.status) {
    case SolveStatus::Unsat:
      v.result = CheckResult::Holds;
      break;
    case SolveStatus::Timeout:
      v.result = CheckResult::Timeout;
      break;
    case SolveStatus::Sat: {
      BitInput j = decode_input(pool, q.solve.assignment, m1.n_vars);
      if (classify(m1, j) == classify(m2, j)) {
        throw SolverError("distinguishing input failed re-validation");
      }
      v.result = CheckResult::Fails;
      v.counterexample = std::move(j);
      break;
    }
  }
  return v;
}

Verdict check_similar(const TsmModel& m1, const TsmModel& m2,
                      const BitInput& input, int eps, const SolverSpec& solver,
                      const SolveBudget& budget) {
  VarPool pool;
  FormulaRef f = build_notsim(m1, m2, input, eps, pool);
  QueryOutcome q = run_query(f, pool, solver, budget);

  Verdict v;
  v.property = Property::Similarity;
  v.vars = q.vars;
  v.clauses = q.clauses;
  v.solve_time_s = q.solve.wall_time_s;
  switch (q.solve.status) {
    case SolveStatus::Unsat:
      v.result = CheckResult::Holds;
      break;
    case SolveStatus::Timeout:
      v.result = CheckResult::Timeout;
      break;
    case SolveStatus::Sat: {
      BitInput j = decode_input(pool, q.solve.assignment, m1.n_vars);
      if (hamming(input, j) > eps || classify(m1, j) == classify(m2, j)) {
        throw SolverError("similarity witness failed re-validation");
      }
      v.result = CheckResult::Fails;
      v.counterexample = std::move(j);
      break;
    }
  }
  return v;
}

namespace {

template <typename CheckOne>
UniversalVerdict run_universal(const std::vector<BitInput>& S, double eta,
                               int jobs, CheckOne&& check_one) {
  if (S.empty()) throw InputError("input set must not be empty");
  if (!(eta > 0.0) || eta > 1.0) {
    throw InputError("fraction must be in (0, 1]");
  }

  UniversalVerdict uv;
  uv.instances.resize(S.size());
  uv.threshold = static_cast<int>(std::floor(eta * S.size()));

  const int n_jobs =
      std::max(1, std::min<int>(jobs, static_cast<int>(S.size())));
  if (n_jobs == 1) {
    for (size_t i = 0; i < S.size(); ++i) uv.instances[i] = check_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= S.size()) return;
        try {
          uv.instances[i] = check_one(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(failure_mu);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < n_jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (const Verdict& v : uv.instances) {
    if (v.result == CheckResult::Holds) ++uv.robust_count;
    if (v.result == CheckResult::Timeout) ++uv.timeout_count;
  }
  if (uv.robust_count >= uv.threshold) {
    uv.result = UniversalResult::Holds;
  } else if (uv.robust_count + uv.timeout_count < uv.threshold) {
    uv.result = UniversalResult::Fails;
  } else {
    uv.result = UniversalResult::Inconclusive;
  }
  return uv;
}

}  // namespace

UniversalVerdict check_universal_robust(const TsmModel& m,
                                        const std::vector<BitInput>& S,
                                        int eps, double eta,
                                        const SolverSpec& solver,
                                        const SolveBudget& budget, int jobs) {
  return run_universal(S, eta, jobs, [&](size_t i) {
    return check_robust(m, S[i], eps, solver, budget);
  });
}

UniversalVerdict check_universal_similar(const TsmModel& m1,
                                         const TsmModel& m2,
                                         const std::vector<BitInput>& S,
                                         int eps, double eta,
                                         const SolverSpec& solver,
                                         const SolveBudget& budget, int jobs) {
  return run_universal(S, eta, jobs, [&](size_t i) {
    return check_similar(m1, m2, S[i], eps, solver, budget);
  });
}

}  // namespace tsmv
