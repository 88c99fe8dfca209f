#include "tsmv/cnf.hpp"

#include <cmath>
#include <cstdlib>

#include "tsmv/errors.hpp"

namespace tsmv {

void Assignment::set(int var, bool value) {
  if (var < 1) throw InputError("Assignment: variable ids are positive");
  if (var >= static_cast<int>(vals_.size())) vals_.resize(var + 1, -1);
  vals_[var] = value ? 1 : 0;
}

void Assignment::unset(int var) {
  if (var >= 1 && var < static_cast<int>(vals_.size())) vals_[var] = -1;
}

bool Assignment::has(int var) const {
  return var >= 1 && var < static_cast<int>(vals_.size()) && vals_[var] >= 0;
}

bool Assignment::value(int var) const {
  if (!has(var)) throw InputError("Assignment: variable " + std::to_string(var) + " unset");
  return vals_[var] == 1;
}

void Cnf::add_clause(std::vector<int> lits) {
  for (int lit : lits) {
    if (lit == 0) throw InputError("Cnf: literal 0 is reserved");
    int v = std::abs(lit);
    if (v > var_count) var_count = v;
  }
  clauses.push_back(std::move(lits));
}

bool Cnf::satisfied_by(const Assignment& a) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (int lit : clause) {
      int v = std::abs(lit);
      if (a.has(v) && a.value(v) == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace tsmv
