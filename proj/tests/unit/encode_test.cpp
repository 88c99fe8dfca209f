#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "tsmv/encode.hpp"
#include "tsmv/errors.hpp"
#include "tsmv/tseitin.hpp"

using namespace tsmv;
using testsupport::all_inputs;
using testsupport::random_model;

namespace {

TsmModel xor_model() {
  TsmModel m;
  m.n_vars = 2;
  m.positive = {Monomial{pos(1), pos(2)}, Monomial{neg(1), neg(2)}};
  m.negative = {Monomial{pos(1), neg(2)}, Monomial{neg(1), pos(2)}};
  m.hp = {100, 2, 3.9};
  return m;
}

// The definitional variables are all functionally determined by the inputs;
// this spells out the intended value of every one of them.
Assignment intended_assignment(const TsmModel& m, const TsmEncoding& enc,
                               const BitInput& in) {
  Assignment a;
  for (int i = 0; i < m.n_vars; ++i) a.set(enc.input_vars[i], in.bits[i] != 0);
  for (int j = 0; j < m.monomials_per_side(); ++j) {
    a.set(enc.neg_monomial_vars[j], m.negative[j].eval(in));
    a.set(enc.pos_monomial_vars[j], m.positive[j].eval(in));
  }
  return a;
}

// Completes the registers and output given a pool to look tags up in.
void complete_assignment(const TsmModel& m, const TsmEncoding& enc,
                         const VarPool& pool, const std::string& tag,
                         const BitInput& in, Assignment& a) {
  const std::string pfx = tag.empty() ? "" : tag + ":";
  const int half = m.monomials_per_side();
  int neg_count = 0, pos_count = 0;
  std::vector<int> neg_prefix, pos_prefix;
  for (int j = 0; j < half; ++j) {
    neg_count += m.negative[j].eval(in) ? 1 : 0;
    pos_count += m.positive[j].eval(in) ? 1 : 0;
    neg_prefix.push_back(neg_count);
    pos_prefix.push_back(pos_count);
  }
  for (int i = 1; i <= half; ++i) {
    for (int j = 1; j <= half; ++j) {
      int nv = pool.lookup(pfx + "sc:-:r:" + std::to_string(i) + ":" +
                           std::to_string(j));
      int pv = pool.lookup(pfx + "sc:+:r:" + std::to_string(i) + ":" +
                           std::to_string(j));
      REQUIRE(nv > 0);
      REQUIRE(pv > 0);
      a.set(nv, neg_prefix[i - 1] >= j);
      a.set(pv, pos_prefix[i - 1] >= j);
    }
  }
  for (int j = 1; j <= half; ++j) {
    // Step j holds when a positive count of j is matched by the negatives.
    bool covered = !(pos_count >= j) || (neg_count >= j);
    a.set(enc.output_step_vars[j - 1], covered);
  }
  a.set(enc.output_var, pos_count > neg_count);
}

}  // namespace

TEST_CASE("the encoding pins every definition to its intended value") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    int per_side = 1 + static_cast<int>(rng.below(3));
    TsmModel m = random_model(n, per_side, n, rng);
    VarPool pool;
    TsmEncoding enc = encode_tsm(m, pool);
    for (const BitInput& in : all_inputs(n)) {
      Assignment a = intended_assignment(m, enc, in);
      complete_assignment(m, enc, pool, "", in, a);
      CHECK(eval(enc.formula, a));
      // The output variable mirrors the counting classifier exactly.
      CHECK(a.value(enc.output_var) == (classify(m, in) == 1));
      // No slack: flipping the output breaks the formula.
      a.set(enc.output_var, !a.value(enc.output_var));
      CHECK_FALSE(eval(enc.formula, a));
    }
  }
}

TEST_CASE("sat-based classification agrees with counting") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    TsmModel m = random_model(n, 1 + static_cast<int>(rng.below(3)), n, rng);
    for (const BitInput& in : all_inputs(n)) {
      CHECK(classify_via_sat(m, in) == classify(m, in));
    }
  }
}

TEST_CASE("ties answer 0") {
  // Both sides hold the same always-true monomial, so every count ties.
  TsmModel m;
  m.n_vars = 2;
  m.positive = {Monomial{}};
  m.negative = {Monomial{}};
  for (const BitInput& in : all_inputs(2)) {
    CHECK(classify(m, in) == 0);
    CHECK(classify_via_sat(m, in) == 0);
  }
}

TEST_CASE("xor-shaped machine classifies through the solver") {
  // The positive side fires on equal inputs, so unequal ones answer 0.
  TsmModel m = xor_model();
  CHECK(classify_via_sat(m, BitInput{{1, 0}, {}}) == 0);
  CHECK(classify_via_sat(m, BitInput{{0, 1}, {}}) == 0);
  CHECK(classify_via_sat(m, BitInput{{0, 0}, {}}) == 1);
  CHECK(classify_via_sat(m, BitInput{{1, 1}, {}}) == 1);
}

TEST_CASE("variable allocation order and tags are frozen") {
  TsmModel m = xor_model();
  VarPool pool;
  TsmEncoding enc = encode_tsm(m, pool);
  std::vector<std::string> expected = {
      "input:x:1", "input:x:2",
      "v:-:1", "v:-:2", "v:+:1", "v:+:2",
      "sc:-:r:1:1", "sc:-:r:1:2", "sc:-:r:2:1", "sc:-:r:2:2",
      "sc:+:r:1:1", "sc:+:r:1:2", "sc:+:r:2:1", "sc:+:r:2:2",
      "out:1", "out:2", "out",
  };
  CHECK(pool.tags_by_id() == expected);
  CHECK(enc.input_vars == std::vector<int>{1, 2});
  CHECK(enc.neg_monomial_vars == std::vector<int>{3, 4});
  CHECK(enc.pos_monomial_vars == std::vector<int>{5, 6});
  CHECK(enc.output_step_vars == std::vector<int>{15, 16});
  CHECK(enc.output_var == 17);
}

TEST_CASE("conjunct shapes are frozen") {
  TsmModel m = xor_model();
  VarPool pool;
  TsmEncoding enc = encode_tsm(m, pool);
  REQUIRE(enc.formula->kind() == Formula::Kind::And);
  const auto& kids = enc.formula->kids();
  // 4 monomial definitions, 2 counters of 4 conjuncts each, 2 comparison
  // steps, 1 output definition.
  REQUIRE(kids.size() == 15);
  // Monomial definitions put the defined variable first, negatives before
  // positives, in machine order.
  CHECK(to_string(kids[0]) == "(x3 <-> (x1 & ~x2))");
  CHECK(to_string(kids[1]) == "(x4 <-> (~x1 & x2))");
  CHECK(to_string(kids[2]) == "(x5 <-> (x1 & x2))");
  CHECK(to_string(kids[3]) == "(x6 <-> (~x1 & ~x2))");
  // Counters follow, negative polarity first.
  CHECK(to_string(kids[4]) == "(x3 <-> x7)");
  CHECK(to_string(kids[8]) == "(x5 <-> x11)");
  // Comparison steps read implication-first, the output inverts their And.
  CHECK(to_string(kids[13]) == "((x14 -> x10) <-> x16)");
  CHECK(to_string(kids[14]) == "(~(x15 & x16) <-> x17)");
}

TEST_CASE("an empty monomial definition collapses to truth") {
  TsmModel m;
  m.n_vars = 1;
  m.positive = {Monomial{}};
  m.negative = {Monomial{pos(1)}};
  VarPool pool;
  TsmEncoding enc = encode_tsm(m, pool);
  CHECK(to_string(enc.formula->kids()[1]) == "(x3 <-> true)");
}

TEST_CASE("two tagged machines share inputs but nothing else") {
  TsmModel m = xor_model();
  VarPool pool;
  TsmEncoding e1 = encode_tsm(m, pool, "m1");
  TsmEncoding e2 = encode_tsm(m, pool, "m2");
  CHECK(e1.input_vars == e2.input_vars);
  CHECK(e1.output_var != e2.output_var);
  CHECK(pool.tag(e1.neg_monomial_vars[0]) == "m1:v:-:1");
  CHECK(pool.tag(e2.neg_monomial_vars[0]) == "m2:v:-:1");
  CHECK(pool.tag(e1.output_var) == "m1:out");
  // Same machine, same input variables: the outputs must coincide. Pinning
  // them apart is unsatisfiable, which the solver should notice.
  FormulaRef both = mk_and({e1.formula, e2.formula,
                            mk_iff(mk_var(e1.output_var),
                                   mk_not(mk_var(e2.output_var)))});
  TseitinResult t = tseitin(both, pool);
  t.cnf.add_clause({t.root});
  CHECK(solve_embedded(t.cnf).status == SolveStatus::Unsat);
}

TEST_CASE("input width is checked") {
  TsmModel m = xor_model();
  CHECK_THROWS_AS(classify_via_sat(m, BitInput{{1, 0, 1}, {}}), InputError);
}

TEST_CASE("an exhausted budget surfaces as an error") {
  TsmModel m = xor_model();
  SolveBudget b;
  b.timeout_s = 0.0;
  CHECK_THROWS_AS(classify_via_sat(m, BitInput{{1, 0}, {}}, {}, b), BudgetError);
}
