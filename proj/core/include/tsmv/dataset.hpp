#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsmv/bitinput.hpp"

namespace tsmv {

using Dataset = std::vector<BitInput>;

// Comma-separated {0,1} rows, label in the last column. Dimension comes from
// the first row; ragged rows, non-binary cells, and empty files are rejected
// with the offending row number.
Dataset parse_binary_csv(const std::string& text);
Dataset load_binary_csv(const std::string& path);

// The same format back out; load of save is the identity.
std::string dataset_to_csv(const Dataset& ds);
void save_binary_csv(const Dataset& ds, const std::string& path);

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;  // row-major
};

// P2 (ASCII) and P5 (raw) portable graymaps, maxval up to 255, '#' comments.
GrayImage parse_pgm(const std::string& text);
GrayImage load_pgm(const std::string& path);

// Row-major flattening, bit = 1 iff intensity is strictly above the
// threshold.
BitInput binarize_grayscale(const GrayImage& img, int threshold);

// Presence vector: bit = 1 iff the word id occurs at least once.
BitInput bag_of_words(const std::vector<int>& tokens, int vocab_size);

}  // namespace tsmv
