#pragma once

#include <cstdint>
#include <vector>

#include "tsmv/bitinput.hpp"
#include "tsmv/model.hpp"

namespace tsmv {

struct TrainConfig {
  int n_monomials = 0;     // total, split evenly between the polarities
  int num_states = 0;      // N
  int margin = 0;          // T
  double specificity = 0;  // s, must be > 1
  int epochs = 0;
  uint64_t seed = 0;
};

// Trains a binary machine. The run is a pure function of (dataset order,
// config, seed): examples are visited in a freshly shuffled order each epoch
// and all randomness comes from one splitmix64 stream seeded with cfg.seed.
// Draw order per example: one gating draw per monomial pair, then the
// per-automaton draws of any triggered feedback, positive side first.
TsmModel train(const std::vector<BitInput>& dataset, const TrainConfig& cfg);

// Fraction of examples whose label matches the prediction.
double accuracy(const TsmModel& m, const std::vector<BitInput>& dataset);

}  // namespace tsmv
