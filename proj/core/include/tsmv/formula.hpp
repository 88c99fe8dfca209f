#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tsmv/assignment.hpp"

namespace tsmv {

class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

// Immutable propositional AST. And/Or are n-ary; Implies and Iff stay
// first-class until clause conversion. Shared subtrees are fine, the tree
// walkers memoize on node identity.
class Formula {
 public:
  enum class Kind : uint8_t { True, False, Var, Not, And, Or, Implies, Iff };

  Kind kind() const { return kind_; }
  int var() const { return var_; }  // Kind::Var only
  const std::vector<FormulaRef>& kids() const { return kids_; }

  Formula(Kind k, int v, std::vector<FormulaRef> kids)
      : kind_(k), var_(v), kids_(std::move(kids)) {}

 private:
  Kind kind_;
  int var_;
  std::vector<FormulaRef> kids_;
};

FormulaRef mk_true();
FormulaRef mk_false();
FormulaRef mk_const(bool b);
FormulaRef mk_var(int var);

// The connective builders fold constants away for Not/And/Or: dropped true
// conjuncts, short-circuited false ones, and so on. An empty conjunction is
// true, an empty disjunction false, and a one-element And/Or collapses to its
// element. No other simplification happens (in particular x and ~x may
// coexist). Implies/Iff are kept structurally unless both sides are already
// constants, so substituting a total assignment grounds any formula out to a
// constant.
FormulaRef mk_not(const FormulaRef& f);
FormulaRef mk_and(std::vector<FormulaRef> kids);
FormulaRef mk_and(const FormulaRef& a, const FormulaRef& b);
FormulaRef mk_or(std::vector<FormulaRef> kids);
FormulaRef mk_or(const FormulaRef& a, const FormulaRef& b);
FormulaRef mk_implies(const FormulaRef& a, const FormulaRef& b);
FormulaRef mk_iff(const FormulaRef& a, const FormulaRef& b);

// Throws InputError when the formula mentions a variable the assignment
// does not cover.
bool eval(const FormulaRef& f, const Assignment& a);

// Replaces every assigned variable by its constant and rebuilds through the
// folding constructors. Unassigned variables stay.
FormulaRef substitute(const FormulaRef& f, const Assignment& partial);

// All variable ids occurring in f, ascending, each once.
std::vector<int> collect_vars(const FormulaRef& f);

// Infix rendering for diagnostics: (x1 & ~(x2 | x3)).
std::string to_string(const FormulaRef& f);

}  // namespace tsmv
