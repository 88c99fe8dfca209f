#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tsmv {

// An assignment to the machine's input variables: one bit per variable,
// optionally carrying a class label.
struct BitInput {
  std::vector<uint8_t> bits;
  std::optional<int> label;

  BitInput() = default;
  explicit BitInput(std::vector<uint8_t> b, std::optional<int> l = {})
      : bits(std::move(b)), label(l) {}

  int size() const { return static_cast<int>(bits.size()); }
  bool operator==(const BitInput&) const = default;
};

// Number of positions where the bit vectors differ; lengths must match.
int hamming(const BitInput& a, const BitInput& b);

// "0110"-style rendering, index 1 first.
std::string bits_to_string(const BitInput& in);
BitInput bits_from_string(const std::string& s);

}  // namespace tsmv
