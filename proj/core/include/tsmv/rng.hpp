#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tsmv {

// Deterministic 64-bit generator (splitmix64 update). Training reproducibility
// depends on the exact draw sequence, so the generator is pinned here instead
// of delegating to std::mt19937_64, whose distributions are not portable.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n); n > 0. Modulo bias is negligible for the n used here
  // and keeps the draw count per call fixed.
  uint64_t below(uint64_t n) { return next() % n; }

  // Fisher-Yates; consumes size()-1 draws.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace tsmv
