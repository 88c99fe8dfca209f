#include "tsmv/dataset.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "tsmv/errors.hpp"

namespace tsmv {

namespace {

std::string read_file_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int parse_bit_cell(const std::string& cell, int row_no) {
  // Cells may carry surrounding spaces; nothing else.
  size_t b = cell.find_first_not_of(" \t");
  size_t e = cell.find_last_not_of(" \t");
  if (b == std::string::npos) {
    throw ParseError("row " + std::to_string(row_no) + ": empty cell");
  }
  std::string t = cell.substr(b, e - b + 1);
  if (t == "0") return 0;
  if (t == "1") return 1;
  throw ParseError("row " + std::to_string(row_no) + ": cell '" + t +
                   "' is not 0 or 1");
}

}  // namespace

Dataset parse_binary_csv(const std::string& text) {
  Dataset ds;
  std::istringstream in(text);
  std::string line;
  int row_no = 0;
  size_t width = 0;
  while (std::getline(in, line)) {
    ++row_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<int> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      cells.push_back(parse_bit_cell(cell, row_no));
    }
    if (cells.size() < 2) {
      throw ParseError("row " + std::to_string(row_no) +
                       ": need at least one feature and a label");
    }
    if (width == 0) {
      width = cells.size();
    } else if (cells.size() != width) {
      throw ParseError("row " + std::to_string(row_no) + ": has " +
                       std::to_string(cells.size()) + " columns, expected " +
                       std::to_string(width));
    }
    BitInput ex;
    ex.bits.assign(cells.begin(), cells.end() - 1);
    ex.label = cells.back();
    ds.push_back(std::move(ex));
  }
  if (ds.empty()) throw ParseError("no data rows");
  return ds;
}

Dataset load_binary_csv(const std::string& path) {
  try {
    return parse_binary_csv(read_file_or_throw(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dataset_to_csv(const Dataset& ds) {
  std::ostringstream out;
  for (const BitInput& ex : ds) {
    for (uint8_t b : ex.bits) out << int(b) << ',';
    out << ex.label.value_or(0) << '\n';
  }
  return out.str();
}

void save_binary_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << dataset_to_csv(ds);
  if (!out.flush()) throw InputError("write failed: " + path);
}

namespace {

// Pulls the next whitespace-separated token, skipping '#' comments to end of
// line.
bool next_pgm_token(const std::string& text, size_t& pos, std::string& tok) {
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else {
      break;
    }
  }
  if (pos >= text.size()) return false;
  size_t start = pos;
  while (pos < text.size() &&
         !std::isspace(static_cast<unsigned char>(text[pos])) &&
         text[pos] != '#') {
    ++pos;
  }
  tok = text.substr(start, pos - start);
  return true;
}

int pgm_int(const std::string& text, size_t& pos, const char* what) {
  std::string tok;
  if (!next_pgm_token(text, pos, tok)) {
    throw ParseError(std::string("image header ends before ") + what);
  }
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
  }
}

}  // namespace

GrayImage parse_pgm(const std::string& text) {
  size_t pos = 0;
  std::string magic;
  if (!next_pgm_token(text, pos, magic) || (magic != "P2" && magic != "P5")) {
    throw ParseError("not a P2/P5 graymap");
  }
  GrayImage img;
  img.width = pgm_int(text, pos, "width");
  img.height = pgm_int(text, pos, "height");
  int maxval = pgm_int(text, pos, "maxval");
  if (img.width < 1 || img.height < 1) throw ParseError("bad image size");
  if (maxval < 1 || maxval > 255) {
    throw ParseError("maxval must be in [1, 255]");
  }
  const size_t count =
      static_cast<size_t>(img.width) * static_cast<size_t>(img.height);
  img.pixels.reserve(count);

  if (magic == "P2") {
    for (size_t i = 0; i < count; ++i) {
      int v = pgm_int(text, pos, "pixel");
      if (v < 0 || v > maxval) throw ParseError("pixel out of range");
      img.pixels.push_back(static_cast<uint8_t>(v));
    }
  } else {
    // One whitespace byte after maxval, then raw bytes.
    if (pos >= text.size()) throw ParseError("truncated raster");
    ++pos;
    if (text.size() - pos < count) throw ParseError("truncated raster");
    for (size_t i = 0; i < count; ++i) {
      uint8_t v = static_cast<uint8_t>(text[pos + i]);
      if (v > maxval) throw ParseError("pixel out of range");
      img.pixels.push_back(v);
    }
  }
  return img;
}

GrayImage load_pgm(const std::string& path) {
  try {
    return parse_pgm(read_file_or_throw(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

BitInput binarize_grayscale(const GrayImage& img, int threshold) {
  if (threshold < 0 || threshold > 255) {
    throw InputError("threshold must be in [0, 255]");
  }
  BitInput out;
  out.bits.reserve(img.pixels.size());
  for (uint8_t p : img.pixels) out.bits.push_back(p > threshold ? 1 : 0);
  return out;
}

BitInput bag_of_words(const std::vector<int>& tokens, int vocab_size) {
  if (vocab_size < 1) throw InputError("vocabulary must not be empty");
  BitInput out;
  out.bits.assign(vocab_size, 0);
  for (int id : tokens) {
    if (id < 0 || id >= vocab_size) {
      throw InputError("word id " + std::to_string(id) +
                       " outside vocabulary of " + std::to_string(vocab_size));
    }
    out.bits[id] = 1;
  }
  return out;
}

}  // namespace tsmv
