#include "tsmv/train.hpp"

#include <numeric>
#include <string>

#include "tsmv/automata.hpp"
#include "tsmv/errors.hpp"
#include "tsmv/rng.hpp"

namespace tsmv {

namespace {

void validate_train_inputs(const std::vector<BitInput>& dataset,
                           const TrainConfig& cfg) {
  if (dataset.empty()) throw InputError("train: empty dataset");
  const int n = dataset.front().size();
  if (n < 1) throw InputError("train: examples need at least one bit");
  for (size_t i = 0; i < dataset.size(); ++i) {
    const BitInput& ex = dataset[i];
    if (ex.size() != n) {
      throw InputError("train: example " + std::to_string(i) +
                       " has dimension " + std::to_string(ex.size()) +
                       ", expected " + std::to_string(n));
    }
    if (!ex.label || (*ex.label != 0 && *ex.label != 1)) {
      throw InputError("train: example " + std::to_string(i) +
                       " needs a 0/1 label");
    }
  }
  if (cfg.n_monomials < 2 || cfg.n_monomials % 2 != 0) {
    throw InputError("train: n_monomials must be even and >= 2");
  }
  if (cfg.num_states < 1) throw InputError("train: num_states must be >= 1");
  if (cfg.margin < 1) throw InputError("train: margin must be >= 1");
  if (cfg.specificity <= 1.0) throw InputError("train: specificity must be > 1");
  if (cfg.epochs < 1) throw InputError("train: epochs must be >= 1");
}

}  // namespace

TsmModel train(const std::vector<BitInput>& dataset, const TrainConfig& cfg) {
  validate_train_inputs(dataset, cfg);

  const int n = dataset.front().size();
  const int per_side = cfg.n_monomials / 2;
  const int T = cfg.margin;

  SplitMix64 rng(cfg.seed);
  TaTeam pos_teams(per_side, n, cfg.num_states);
  TaTeam neg_teams(per_side, n, cfg.num_states);

  std::vector<size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), size_t{0});

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    for (size_t idx : order) {
      const BitInput& ex = dataset[idx];
      const int y = *ex.label;

      int sum_neg = 0, sum_pos = 0;
      for (int j = 0; j < per_side; ++j) {
        sum_neg += neg_teams.monomial_value(j, ex);
        sum_pos += pos_teams.monomial_value(j, ex);
      }
      const int v = clip(sum_neg - sum_pos, -T, T);

      for (int j = 0; j < per_side; ++j) {
        const double u = rng.uniform();
        if (y == 1) {
          if (u <= static_cast<double>(T - v) / (2.0 * T)) {
            type1_feedback(pos_teams, j, ex, cfg.specificity, rng);
            type2_feedback(neg_teams, j, ex);
          }
        } else {
          if (u <= static_cast<double>(T + v) / (2.0 * T)) {
            type2_feedback(pos_teams, j, ex);
            type1_feedback(neg_teams, j, ex, cfg.specificity, rng);
          }
        }
      }
    }
  }

  TsmModel m;
  m.n_vars = n;
  m.positive = pos_teams.extract_monomials();
  m.negative = neg_teams.extract_monomials();
  m.hp = {cfg.num_states, cfg.margin, cfg.specificity};
  m.validate();
  return m;
}

double accuracy(const TsmModel& m, const std::vector<BitInput>& dataset) {
  if (dataset.empty()) throw InputError("accuracy: empty dataset");
  int hits = 0;
  for (const BitInput& ex : dataset) {
    if (!ex.label) throw InputError("accuracy: unlabeled example");
    hits += classify(m, ex) == *ex.label;
  }
  return static_cast<double>(hits) / static_cast<double>(dataset.size());
}

}  // namespace tsmv
