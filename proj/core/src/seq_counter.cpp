#include "tsmv/seq_counter.hpp"

#include "tsmv/errors.hpp"

namespace tsmv {

SeqCounterEncoding seq_counter(const std::vector<FormulaRef>& lits, int K,
                               VarPool& pool, const std::string& tag) {
  const int l = static_cast<int>(lits.size());
  if (l < 1) throw InputError("seq_counter: needs at least one input");
  if (K < 1) throw InputError("seq_counter: threshold must be >= 1");

  SeqCounterEncoding enc;
  enc.r.assign(l, std::vector<int>(K, 0));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < K; ++j) {
      enc.r[i][j] = pool.var(tag + ":r:" + std::to_string(i + 1) + ":" +
                             std::to_string(j + 1));
    }
  }

  auto r = [&](int i, int j) { return mk_var(enc.r[i][j]); };

  // Register semantics, row by row: the first row sees only lits[0], every
  // later row either carries the count over or bumps it by lits[i].
  enc.conjuncts.push_back(mk_iff(lits[0], r(0, 0)));
  for (int j = 1; j < K; ++j) {
    enc.conjuncts.push_back(mk_not(r(0, j)));
  }
  for (int i = 1; i < l; ++i) {
    enc.conjuncts.push_back(mk_iff(r(i, 0), mk_or(lits[i], r(i - 1, 0))));
  }
  for (int i = 1; i < l; ++i) {
    for (int j = 1; j < K; ++j) {
      enc.conjuncts.push_back(
          mk_iff(r(i, j), mk_or(mk_and(lits[i], r(i - 1, j - 1)), r(i - 1, j))));
    }
  }

  enc.threshold_var = enc.r[l - 1][K - 1];
  enc.formula = mk_and(enc.conjuncts);
  return enc;
}

}  // namespace tsmv
