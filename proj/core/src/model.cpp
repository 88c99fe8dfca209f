#include "tsmv/model.hpp"

#include <algorithm>
#include <string>

#include "tsmv/errors.hpp"

namespace tsmv {

Monomial::Monomial(std::initializer_list<Literal> lits) {
  for (Literal l : lits) add(l);
}

void Monomial::add(Literal lit) {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), lit);
  if (it != lits_.end() && *it == lit) return;
  lits_.insert(it, lit);
}

bool Monomial::contains(Literal lit) const {
  return std::binary_search(lits_.begin(), lits_.end(), lit);
}

bool Monomial::eval(const BitInput& in) const {
  for (const Literal& l : lits_) {
    bool v = in.bits[l.var_index - 1];
    if (l.negated) v = !v;
    if (!v) return false;
  }
  return true;  // empty conjunction
}

void TsmModel::validate() const {
  if (n_vars < 1) throw InputError("model: n_vars must be >= 1");
  if (positive.size() != negative.size()) {
    throw InputError("model: positive/negative monomial counts differ (" +
                     std::to_string(positive.size()) + " vs " +
                     std::to_string(negative.size()) + ")");
  }
  if (positive.empty()) throw InputError("model: needs at least one monomial per side");
  auto check_side = [&](const std::vector<Monomial>& side) {
    for (const Monomial& mo : side) {
      for (const Literal& l : mo.literals()) {
        if (l.var_index < 1 || l.var_index > n_vars) {
          throw InputError("model: literal index " + std::to_string(l.var_index) +
                           " out of range 1.." + std::to_string(n_vars));
        }
      }
    }
  };
  check_side(positive);
  check_side(negative);
}

int clip(int v, int lo, int hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

namespace {
void check_dims(const TsmModel& m, const BitInput& in) {
  if (in.size() != m.n_vars) {
    throw InputError("classify: input has " + std::to_string(in.size()) +
                     " bits, model expects " + std::to_string(m.n_vars));
  }
}
}  // namespace

int vote_margin(const TsmModel& m, const BitInput& in) {
  check_dims(m, in);
  int sum_neg = 0, sum_pos = 0;
  for (const Monomial& mo : m.negative) sum_neg += mo.eval(in);
  for (const Monomial& mo : m.positive) sum_pos += mo.eval(in);
  return sum_neg - sum_pos;
}

int classify(const TsmModel& m, const BitInput& in) {
  return vote_margin(m, in) >= 0 ? 0 : 1;
}

void MulticlassModel::validate() const {
  if (classes.empty()) throw InputError("multiclass: no classes");
  int n = classes.front().second.n_vars;
  for (const auto& [id, m] : classes) {
    (void)id;
    m.validate();
    if (m.n_vars != n) throw InputError("multiclass: machines disagree on n_vars");
  }
}

int classify_multiclass(const MulticlassModel& mm, const BitInput& in) {
  if (mm.classes.empty()) throw InputError("multiclass: no classes");
  bool have = false;
  int best_id = 0, best_score = 0;
  for (const auto& [id, m] : mm.classes) {
    int score = -vote_margin(m, in);  // positive votes minus negative ones
    if (!have || score > best_score || (score == best_score && id < best_id)) {
      have = true;
      best_id = id;
      best_score = score;
    }
  }
  return best_id;
}

}  // namespace tsmv
