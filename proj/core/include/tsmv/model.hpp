#pragma once

#include <compare>
#include <initializer_list>
#include <utility>
#include <vector>

#include "tsmv/bitinput.hpp"

namespace tsmv {

// One occurrence of an input variable, plain or negated. var_index is 1-based.
struct Literal {
  int var_index = 0;
  bool negated = false;
  auto operator<=>(const Literal&) const = default;
};

inline Literal pos(int v) { return {v, false}; }
inline Literal neg(int v) { return {v, true}; }

// A conjunction of literals. The empty monomial evaluates to true on every
// input. A literal may co-occur with its own negation; such a monomial is
// simply false everywhere and is kept as-is.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<Literal> lits);

  void add(Literal lit);  // duplicates are ignored
  bool contains(Literal lit) const;
  bool empty() const { return lits_.empty(); }
  int size() const { return static_cast<int>(lits_.size()); }

  // Sorted by (var_index, plain-before-negated).
  const std::vector<Literal>& literals() const { return lits_; }

  bool eval(const BitInput& in) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Literal> lits_;
};

struct TsmHyperparams {
  int num_states = 0;       // N: automaton states per action
  int margin = 0;           // T: vote clipping threshold
  double specificity = 0;   // s
  bool operator==(const TsmHyperparams&) const = default;
};

// A trained machine: equally many positive (voting for class 1) and negative
// (voting for class 0) monomials over n_vars input variables.
struct TsmModel {
  int n_vars = 0;
  std::vector<Monomial> positive;
  std::vector<Monomial> negative;
  TsmHyperparams hp;

  int monomials_per_side() const { return static_cast<int>(positive.size()); }
  int n_monomials() const {
    return static_cast<int>(positive.size() + negative.size());
  }

  // Throws InputError on a malformed model (uneven split, out-of-range
  // literal indices, n_vars < 1).
  void validate() const;

  bool operator==(const TsmModel&) const = default;
};

int clip(int v, int lo, int hi);

// Sum of negative-monomial values minus sum of positive ones, unclipped.
int vote_margin(const TsmModel& m, const BitInput& in);

// 0 when the negative monomials win or tie, 1 otherwise.
int classify(const TsmModel& m, const BitInput& in);

// One binary machine per class; prediction is the class whose positive
// monomials beat its negative ones by the largest difference.
struct MulticlassModel {
  std::vector<std::pair<int, TsmModel>> classes;  // (class id, machine)
  void validate() const;
};

// Ties go to the lowest class id.
int classify_multiclass(const MulticlassModel& mm, const BitInput& in);

}  // namespace tsmv
