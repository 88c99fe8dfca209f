#include "tsmv/digits.hpp"

#include "tsmv/errors.hpp"

namespace tsmv {

namespace {

constexpr int kSide = 8;

bool ring_cell(int r, int c) {
  if (r < 1 || r > 6 || c < 1 || c > 6) return false;
  return r == 1 || r == 6 || c == 1 || c == 6;
}

bool bar_cell(int r, int c) { return r >= 1 && r <= 6 && (c == 3 || c == 4); }

}  // namespace

GrayImage render_digit(int digit_class, SplitMix64& rng, double noise) {
  if (digit_class != 0 && digit_class != 1) {
    throw InputError("glyph class must be 0 or 1");
  }
  GrayImage img;
  img.width = kSide;
  img.height = kSide;
  img.pixels.resize(kSide * kSide);

  const int dr = static_cast<int>(rng.below(3)) - 1;  // jitter in {-1,0,1}
  const int dc = static_cast<int>(rng.below(3)) - 1;

  for (int r = 0; r < kSide; ++r) {
    for (int c = 0; c < kSide; ++c) {
      const int gr = r - dr;
      const int gc = c - dc;
      const bool on =
          digit_class == 0 ? ring_cell(gr, gc) : bar_cell(gr, gc);
      int v = on ? 210 + static_cast<int>(rng.below(40))
                 : 20 + static_cast<int>(rng.below(40));
      if (rng.uniform() < noise) v = static_cast<int>(rng.below(256));
      img.pixels[r * kSide + c] = static_cast<uint8_t>(v);
    }
  }
  return img;
}

DigitSet make_digit_set(const DigitSetConfig& cfg) {
  if (cfg.train_count < 2 || cfg.test_count < 2) {
    throw InputError("need at least two examples per split");
  }
  SplitMix64 rng(cfg.seed);
  auto fill = [&](Dataset& out, int count) {
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
      const int cls = i % 2;
      GrayImage img = render_digit(cls, rng, cfg.noise);
      BitInput ex = binarize_grayscale(img, cfg.threshold);
      ex.label = cls;
      out.push_back(std::move(ex));
    }
  };
  DigitSet set;
  fill(set.train, cfg.train_count);
  fill(set.test, cfg.test_count);
  return set;
}

}  // namespace tsmv
