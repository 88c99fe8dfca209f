#pragma once

#include <string>

#include "tsmv/model.hpp"

namespace tsmv {

// Text form, one monomial per line after the header:
//
//   tsm v1 n=2 N=100 T=2 s=3.9
//   + 1,2
//   + ~1,~2
//   - 1,~2
//   - ~1,2
//
// '+' lines are positive monomials, '-' lines negative ones; literals are
// 1-based variable indices, '~' marks negation, and an empty monomial is
// written as "{}". Ordering is fixed (positive block first, literals sorted),
// so equal models serialize to identical bytes.
std::string model_to_text(const TsmModel& m);
TsmModel model_from_text(const std::string& text);

void save_model(const TsmModel& m, const std::string& path);
TsmModel load_model(const std::string& path);

}  // namespace tsmv
