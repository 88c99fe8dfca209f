#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "tsmv/dataset.hpp"
#include "tsmv/errors.hpp"

using namespace tsmv;
using testsupport::TempPath;
using testsupport::read_text_file;
using testsupport::write_text_file;

TEST_CASE("csv parsing") {
  Dataset ds = parse_binary_csv("1,0,1,1\n0,1,1,0\n");
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].bits == std::vector<uint8_t>{1, 0, 1});
  CHECK(ds[0].label == 1);
  CHECK(ds[1].bits == std::vector<uint8_t>{0, 1, 1});
  CHECK(ds[1].label == 0);
}

TEST_CASE("csv tolerates padding, blank lines, and CRLF") {
  Dataset ds = parse_binary_csv(" 1 , 0 ,1\r\n\r\n0,1, 0\r\n\n");
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].bits == std::vector<uint8_t>{1, 0});
  CHECK(ds[1].label == 0);
}

TEST_CASE("csv rejections name the row") {
  CHECK_THROWS_AS(parse_binary_csv(""), ParseError);
  CHECK_THROWS_AS(parse_binary_csv("\n\n"), ParseError);
  CHECK_THROWS_AS(parse_binary_csv("1\n"), ParseError);        // label only
  CHECK_THROWS_AS(parse_binary_csv("1,2\n"), ParseError);      // non-binary
  CHECK_THROWS_AS(parse_binary_csv("1,0\n1,0,1\n"), ParseError);  // ragged
  CHECK_THROWS_AS(parse_binary_csv("1,\n"), ParseError);       // empty cell
  CHECK_THROWS_AS(parse_binary_csv("1,x\n"), ParseError);

  try {
    parse_binary_csv("1,0\n0,0\n1,0,1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
}

TEST_CASE("csv round trip") {
  Dataset ds = {BitInput{{1, 0, 1}, 1}, BitInput{{0, 0, 0}, 0}};
  CHECK(dataset_to_csv(ds) == "1,0,1,1\n0,0,0,0\n");
  CHECK(parse_binary_csv(dataset_to_csv(ds)) == ds);

  TempPath p{".csv"};
  save_binary_csv(ds, p.str());
  CHECK(load_binary_csv(p.str()) == ds);
  CHECK(read_text_file(p.str()) == "1,0,1,1\n0,0,0,0\n");
}

TEST_CASE("missing csv file") {
  CHECK_THROWS_AS(load_binary_csv("/nonexistent/never.csv"), Error);
}

TEST_CASE("ascii graymap") {
  GrayImage img = parse_pgm(
      "P2\n"
      "# a comment\n"
      "3 2\n"
      "255\n"
      "0 128 255\n"
      "7 # trailing comment\n"
      "9 200\n");
  CHECK(img.width == 3);
  CHECK(img.height == 2);
  CHECK(img.pixels == std::vector<uint8_t>{0, 128, 255, 7, 9, 200});
}

TEST_CASE("raw graymap") {
  std::string text = "P5\n2 2\n255\n";
  text.push_back(static_cast<char>(0));
  text.push_back(static_cast<char>(255));
  text.push_back(static_cast<char>(10));
  text.push_back(static_cast<char>(129));
  GrayImage img = parse_pgm(text);
  CHECK(img.width == 2);
  CHECK(img.height == 2);
  CHECK(img.pixels == std::vector<uint8_t>{0, 255, 10, 129});
}

TEST_CASE("graymap rejections") {
  CHECK_THROWS_AS(parse_pgm(""), ParseError);
  CHECK_THROWS_AS(parse_pgm("P3\n1 1\n255\n0\n"), ParseError);  // wrong magic
  CHECK_THROWS_AS(parse_pgm("P2\n1 1\n300\n0\n"), ParseError);  // maxval
  CHECK_THROWS_AS(parse_pgm("P2\n2 1\n255\n0\n"), ParseError);  // missing pixel
  CHECK_THROWS_AS(parse_pgm("P2\n1 1\n255\n256\n"), ParseError);  // out of range
  CHECK_THROWS_AS(parse_pgm("P2\n0 1\n255\n"), ParseError);     // degenerate
  std::string short_raw = "P5\n2 2\n255\n";
  short_raw.push_back(static_cast<char>(1));
  CHECK_THROWS_AS(parse_pgm(short_raw), ParseError);
}

TEST_CASE("graymap file loading") {
  TempPath p{".pgm"};
  write_text_file(p.str(), "P2\n2 1\n255\n20 220\n");
  GrayImage img = load_pgm(p.str());
  CHECK(img.pixels == std::vector<uint8_t>{20, 220});
  CHECK_THROWS_AS(load_pgm("/nonexistent/never.pgm"), Error);
}

TEST_CASE("binarization is a strict cut") {
  GrayImage img;
  img.width = 2;
  img.height = 2;
  img.pixels = {0, 128, 129, 255};
  BitInput in = binarize_grayscale(img, 128);
  CHECK(in.bits == std::vector<uint8_t>{0, 0, 1, 1});
  CHECK_FALSE(in.label.has_value());

  CHECK(binarize_grayscale(img, 0).bits == std::vector<uint8_t>{0, 1, 1, 1});
  CHECK_THROWS_AS(binarize_grayscale(img, -1), InputError);
  CHECK_THROWS_AS(binarize_grayscale(img, 256), InputError);
}

TEST_CASE("token presence vector") {
  BitInput in = bag_of_words({2, 0, 2, 3}, 5);
  CHECK(in.bits == std::vector<uint8_t>{1, 0, 1, 1, 0});
  CHECK(bag_of_words({}, 3).bits == std::vector<uint8_t>{0, 0, 0});
  CHECK_THROWS_AS(bag_of_words({5}, 5), InputError);
  CHECK_THROWS_AS(bag_of_words({-1}, 5), InputError);
}
