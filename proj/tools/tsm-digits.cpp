// Generates the synthetic two-glyph 8x8 dataset as binary CSV files.

#include <iostream>

#include "CLI11.hpp"
#include "tsmv/digits.hpp"
#include "tsmv/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Synthetic 8x8 glyph dataset generator"};
  tsmv::DigitSetConfig cfg;
  std::string train_out = "digits-train.csv";
  std::string test_out = "digits-test.csv";
  app.add_option("--train-out", train_out, "training split path");
  app.add_option("--test-out", test_out, "test split path");
  app.add_option("--train-count", cfg.train_count, "training examples");
  app.add_option("--test-count", cfg.test_count, "test examples");
  app.add_option("--seed", cfg.seed, "generator seed");
  app.add_option("--noise", cfg.noise, "per-pixel noise probability");
  app.add_option("--threshold", cfg.threshold, "binarization threshold");
  CLI11_PARSE(app, argc, argv);

  try {
    tsmv::DigitSet set = tsmv::make_digit_set(cfg);
    tsmv::save_binary_csv(set.train, train_out);
    tsmv::save_binary_csv(set.test, test_out);
    std::cout << "wrote " << set.train.size() << " train examples to "
              << train_out << "\n";
    std::cout << "wrote " << set.test.size() << " test examples to "
              << test_out << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
