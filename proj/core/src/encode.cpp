#include "tsmv/encode.hpp"

#include <string>
#include <utility>
#include <vector>

#include "tsmv/errors.hpp"
#include "tsmv/seq_counter.hpp"
#include "tsmv/tseitin.hpp"

namespace tsmv {

namespace {

FormulaRef monomial_body(const Monomial& c, const std::vector<int>& input_vars) {
  std::vector<FormulaRef> lits;
  lits.reserve(c.literals().size());
  for (const Literal& l : c.literals()) {
    FormulaRef x = mk_var(input_vars[l.var_index - 1]);
    lits.push_back(l.negated ? mk_not(x) : x);
  }
  return mk_and(std::move(lits));  // no literals: constant true
}

}  // namespace

TsmEncoding encode_tsm(const TsmModel& m, VarPool& pool,
                       const std::string& tag) {
  m.validate();
  const std::string pfx = tag.empty() ? "" : tag + ":";
  const int half = m.monomials_per_side();

  TsmEncoding enc;
  enc.input_vars.reserve(m.n_vars);
  for (int i = 1; i <= m.n_vars; ++i) {
    enc.input_vars.push_back(pool.var("input:x:" + std::to_string(i)));
  }
  for (int j = 1; j <= half; ++j) {
    enc.neg_monomial_vars.push_back(pool.var(pfx + "v:-:" + std::to_string(j)));
  }
  for (int j = 1; j <= half; ++j) {
    enc.pos_monomial_vars.push_back(pool.var(pfx + "v:+:" + std::to_string(j)));
  }

  std::vector<FormulaRef> conjuncts;
  for (int j = 0; j < half; ++j) {
    conjuncts.push_back(mk_iff(mk_var(enc.neg_monomial_vars[j]),
                               monomial_body(m.negative[j], enc.input_vars)));
  }
  for (int j = 0; j < half; ++j) {
    conjuncts.push_back(mk_iff(mk_var(enc.pos_monomial_vars[j]),
                               monomial_body(m.positive[j], enc.input_vars)));
  }

  std::vector<FormulaRef> neg_lits, pos_lits;
  for (int v : enc.neg_monomial_vars) neg_lits.push_back(mk_var(v));
  for (int v : enc.pos_monomial_vars) pos_lits.push_back(mk_var(v));
  SeqCounterEncoding cneg = seq_counter(neg_lits, half, pool, pfx + "sc:-");
  SeqCounterEncoding cpos = seq_counter(pos_lits, half, pool, pfx + "sc:+");
  conjuncts.insert(conjuncts.end(), cneg.conjuncts.begin(),
                   cneg.conjuncts.end());
  conjuncts.insert(conjuncts.end(), cpos.conjuncts.begin(),
                   cpos.conjuncts.end());

  // Output: class 1 wins only on a strict majority. Step j records that a
  // positive count of at least j is matched by the negative side; the answer
  // is 1 exactly when some step fails, i.e. some count is reached by the
  // positive monomials alone.
  for (int j = 1; j <= half; ++j) {
    enc.output_step_vars.push_back(pool.var(pfx + "out:" + std::to_string(j)));
  }
  enc.output_var = pool.var(pfx + "out");

  std::vector<FormulaRef> steps;
  for (int j = 0; j < half; ++j) {
    FormulaRef covered = mk_implies(mk_var(cpos.r[half - 1][j]),
                                    mk_var(cneg.r[half - 1][j]));
    conjuncts.push_back(mk_iff(covered, mk_var(enc.output_step_vars[j])));
    steps.push_back(mk_var(enc.output_step_vars[j]));
  }
  conjuncts.push_back(
      mk_iff(mk_not(mk_and(std::move(steps))), mk_var(enc.output_var)));

  enc.formula = mk_and(std::move(conjuncts));
  return enc;
}

int classify_via_sat(const TsmModel& m, const BitInput& in,
                     const SolverSpec& spec, const SolveBudget& budget) {
  if (static_cast<int>(in.bits.size()) != m.n_vars) {
    throw InputError("input width does not match the model");
  }
  VarPool pool;
  TsmEncoding enc = encode_tsm(m, pool);

  Assignment fixed;
  for (int i = 0; i < m.n_vars; ++i) {
    fixed.set(enc.input_vars[i], in.bits[i] != 0);
  }
  FormulaRef grounded = substitute(enc.formula, fixed);

  TseitinResult t = tseitin(grounded, pool);
  t.cnf.add_clause({t.root});
  t.cnf.add_clause({enc.output_var});

  SolveResult r = solve_cnf(t.cnf, spec, budget);
  if (r.status == SolveStatus::Timeout) {
    throw BudgetError("solver gave up while classifying");
  }
  return r.status == SolveStatus::Sat ? 1 : 0;
}

}  // namespace tsmv
