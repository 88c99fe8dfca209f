#pragma once

#include <vector>

#include "tsmv/assignment.hpp"

namespace tsmv {

// Clause form. Literals are nonzero signed variable ids; var_count tracks the
// largest id mentioned and may be raised further by a DIMACS header.
struct Cnf {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;

  void add_clause(std::vector<int> lits);

  // True when every clause contains a literal the assignment makes true.
  bool satisfied_by(const Assignment& a) const;
};

}  // namespace tsmv
