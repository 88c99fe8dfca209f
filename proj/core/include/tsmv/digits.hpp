#pragma once

#include <cstdint>

#include "tsmv/dataset.hpp"
#include "tsmv/rng.hpp"

namespace tsmv {

// Synthetic 8x8 two-glyph recognition task: class 0 draws a ring, class 1 a
// vertical bar, both with positional jitter, intensity wobble, and a sprinkle
// of noise pixels. Small enough to verify against, hard enough that training
// has something to do.

struct DigitSetConfig {
  int train_count = 240;
  int test_count = 60;
  uint64_t seed = 1;
  double noise = 0.03;      // per-pixel chance of a random intensity
  int threshold = 128;      // binarization cut
};

struct DigitSet {
  Dataset train;
  Dataset test;
};

// One 8x8 glyph of the given class (0 or 1).
GrayImage render_digit(int digit_class, SplitMix64& rng, double noise);

// Balanced, deterministically generated train/test split; examples are
// binarized and labeled.
DigitSet make_digit_set(const DigitSetConfig& cfg);

}  // namespace tsmv
