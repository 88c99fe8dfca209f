#include "tsmv/oracle.hpp"

#include <cstdint>
#include <functional>
#include <vector>

#include "tsmv/errors.hpp"

namespace tsmv {

namespace {

// Sum over k <= eps of C(n, k), capped; the cap doubles as the enumeration
// budget.
uint64_t neighbourhood_size(int n, int eps, uint64_t cap) {
  uint64_t total = 0;
  uint64_t binom = 1;  // C(n, 0)
  for (int k = 0; k <= eps; ++k) {
    total += binom;
    if (total > cap) return cap + 1;
    if (binom > cap) return cap + 1;
    binom = binom * static_cast<uint64_t>(n - k) / static_cast<uint64_t>(k + 1);
  }
  return total;
}

constexpr uint64_t kMaxNeighbourhood = 1000000;

// Visits the input and every variant with at most eps bits flipped, in order
// of flip count, combinations lexicographic by flipped position. Stops early
// when the visitor returns true.
void for_each_neighbour(const BitInput& input, int eps,
                        const std::function<bool(const BitInput&)>& visit) {
  const int n = static_cast<int>(input.bits.size());
  BitInput j = input;
  if (visit(j)) return;
  for (int k = 1; k <= eps; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      for (int i : idx) j.bits[i] ^= 1;
      bool done = visit(j);
      for (int i : idx) j.bits[i] ^= 1;
      if (done) return;
      // next k-combination of {0..n-1}
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

void check_neighbourhood_args(const TsmModel& m, const BitInput& input,
                              int eps) {
  m.validate();
  if (static_cast<int>(input.bits.size()) != m.n_vars) {
    throw InputError("input width does not match the model");
  }
  if (eps < 0 || eps > m.n_vars) {
    throw InputError("flip budget must be in [0, n]");
  }
  if (neighbourhood_size(m.n_vars, eps, kMaxNeighbourhood) >
      kMaxNeighbourhood) {
    throw BudgetError("perturbation neighbourhood too large to enumerate");
  }
}

}  // namespace

OracleVerdict brute_oracle_robust(const TsmModel& m, const BitInput& input,
                                  int eps) {
  check_neighbourhood_args(m, input, eps);
  const int base = classify(m, input);
  OracleVerdict v;
  v.holds = true;
  for_each_neighbour(input, eps, [&](const BitInput& j) {
    if (classify(m, j) != base) {
      v.holds = false;
      v.counterexample = j;
      return true;
    }
    return false;
  });
  return v;
}

OracleVerdict brute_oracle_similar(const TsmModel& m1, const TsmModel& m2,
                                   const BitInput& input, int eps) {
  check_neighbourhood_args(m1, input, eps);
  m2.validate();
  if (m1.n_vars != m2.n_vars) {
    throw InputError("models have different input widths");
  }
  OracleVerdict v;
  v.holds = true;
  for_each_neighbour(input, eps, [&](const BitInput& j) {
    if (classify(m1, j) != classify(m2, j)) {
      v.holds = false;
      v.counterexample = j;
      return true;
    }
    return false;
  });
  return v;
}

OracleVerdict brute_oracle_equiv(const TsmModel& m1, const TsmModel& m2) {
  m1.validate();
  m2.validate();
  if (m1.n_vars != m2.n_vars) {
    throw InputError("models have different input widths");
  }
  if (m1.n_vars > 20) {
    throw BudgetError("input space too large to enumerate");
  }
  OracleVerdict v;
  v.holds = true;
  BitInput j;
  j.bits.resize(m1.n_vars);
  const uint64_t total = uint64_t{1} << m1.n_vars;
  for (uint64_t x = 0; x < total; ++x) {
    for (int b = 0; b < m1.n_vars; ++b) j.bits[b] = (x >> b) & 1;
    if (classify(m1, j) != classify(m2, j)) {
      v.holds = false;
      v.counterexample = j;
      return v;
    }
  }
  return v;
}

}  // namespace tsmv
