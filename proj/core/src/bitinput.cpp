#include "tsmv/bitinput.hpp"

#include "tsmv/errors.hpp"

namespace tsmv {

int hamming(const BitInput& a, const BitInput& b) {
  if (a.size() != b.size()) {
    throw InputError("hamming: length mismatch (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  }
  int d = 0;
  for (int i = 0; i < a.size(); ++i) {
    d += a.bits[i] != b.bits[i];
  }
  return d;
}

std::string bits_to_string(const BitInput& in) {
  std::string s;
  s.reserve(in.bits.size());
  for (uint8_t b : in.bits) s.push_back(b ? '1' : '0');
  return s;
}

BitInput bits_from_string(const std::string& s) {
  BitInput in;
  in.bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw InputError("bits_from_string: bad character '" + std::string(1, c) + "'");
    }
    in.bits.push_back(c == '1');
  }
  return in;
}

}  // namespace tsmv
