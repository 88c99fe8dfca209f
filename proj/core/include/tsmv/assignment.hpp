#pragma once

#include <cstdint>
#include <vector>

namespace tsmv {

// Partial or total valuation of propositional variables, indexed by the
// positive variable id.
class Assignment {
 public:
  void set(int var, bool value);
  void unset(int var);
  bool has(int var) const;
  bool value(int var) const;  // throws InputError when unset
  int max_var() const { return static_cast<int>(vals_.size()) - 1; }
  bool operator==(const Assignment&) const = default;

 private:
  std::vector<int8_t> vals_;  // index 0 unused; -1 unset
};

}  // namespace tsmv
