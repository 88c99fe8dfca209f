#include "doctest.h"
#include "helpers.hpp"
#include "tsmv/errors.hpp"
#include "tsmv/model_io.hpp"
#include "tsmv/train.hpp"

using namespace tsmv;

namespace {

std::vector<BitInput> xor_points() {
  return {
      BitInput({0, 0}, 0),
      BitInput({1, 1}, 0),
      BitInput({1, 0}, 1),
      BitInput({0, 1}, 1),
  };
}

}  // namespace

TEST_CASE("training learns the exclusive-or labels") {
  TrainConfig cfg;
  cfg.n_monomials = 4;
  cfg.num_states = 100;
  cfg.margin = 2;
  cfg.specificity = 3.0;
  cfg.epochs = 200;
  cfg.seed = 2;
  TsmModel m = train(xor_points(), cfg);
  CHECK(m.n_vars == 2);
  CHECK(m.monomials_per_side() == 2);
  CHECK(accuracy(m, xor_points()) == 1.0);
}

TEST_CASE("single-example dataset is memorized") {
  std::vector<BitInput> data = {BitInput({1}, 1)};
  TrainConfig cfg;
  cfg.n_monomials = 2;
  cfg.num_states = 20;
  cfg.margin = 2;
  cfg.specificity = 3.0;
  cfg.epochs = 100;
  cfg.seed = 1;
  TsmModel m = train(data, cfg);
  CHECK(classify(m, BitInput({1})) == 1);
}

TEST_CASE("training is a pure function of config and data") {
  TrainConfig cfg;
  cfg.n_monomials = 6;
  cfg.num_states = 50;
  cfg.margin = 3;
  cfg.specificity = 2.5;
  // Few enough epochs that the trajectories have not yet converged onto the
  // same solution; at this point the extracted monomials still track the
  // random stream closely.
  cfg.epochs = 3;
  cfg.seed = 77;
  TsmModel a = train(xor_points(), cfg);
  TsmModel b = train(xor_points(), cfg);
  CHECK(model_to_text(a) == model_to_text(b));

  cfg.seed = 78;
  TsmModel c = train(xor_points(), cfg);
  // Different stream, different trajectory. (Equality would be an
  // astronomical coincidence, not an error, but it would deserve a look.)
  CHECK(model_to_text(a) != model_to_text(c));
}

TEST_CASE("hyperparameters carried into the model header") {
  TrainConfig cfg;
  cfg.n_monomials = 2;
  cfg.num_states = 30;
  cfg.margin = 4;
  cfg.specificity = 3.5;
  cfg.epochs = 1;
  cfg.seed = 9;
  TsmModel m = train(xor_points(), cfg);
  CHECK(m.hp.num_states == 30);
  CHECK(m.hp.margin == 4);
  CHECK(m.hp.specificity == 3.5);
}

TEST_CASE("invalid training configurations are rejected") {
  TrainConfig cfg;
  cfg.n_monomials = 4;
  cfg.num_states = 10;
  cfg.margin = 2;
  cfg.specificity = 3.0;
  cfg.epochs = 10;
  cfg.seed = 1;

  SUBCASE("empty dataset") {
    CHECK_THROWS_AS(train({}, cfg), InputError);
  }
  SUBCASE("odd monomial count") {
    cfg.n_monomials = 3;
    CHECK_THROWS_AS(train(xor_points(), cfg), InputError);
  }
  SUBCASE("zero epochs") {
    cfg.epochs = 0;
    CHECK_THROWS_AS(train(xor_points(), cfg), InputError);
  }
  SUBCASE("specificity at most 1") {
    cfg.specificity = 1.0;
    CHECK_THROWS_AS(train(xor_points(), cfg), InputError);
  }
  SUBCASE("missing label") {
    auto data = xor_points();
    data[1].label.reset();
    CHECK_THROWS_AS(train(data, cfg), InputError);
  }
  SUBCASE("non-binary label") {
    auto data = xor_points();
    data[2].label = 3;
    CHECK_THROWS_AS(train(data, cfg), InputError);
  }
  SUBCASE("ragged dimensions") {
    auto data = xor_points();
    data[0].bits.push_back(1);
    CHECK_THROWS_AS(train(data, cfg), InputError);
  }
}

TEST_CASE("accuracy counts matching labels") {
  TsmModel m;
  m.n_vars = 2;
  m.positive = {Monomial{pos(1)}};
  m.negative = {Monomial{neg(1)}};
  // classify: (1,*) -> margin 0-1 = -1 -> 1; (0,*) -> 1-0 = 1 -> 0.
  std::vector<BitInput> data = {
      BitInput({1, 0}, 1),  // right
      BitInput({1, 1}, 0),  // wrong
      BitInput({0, 0}, 0),  // right
      BitInput({0, 1}, 0),  // right
  };
  CHECK(accuracy(m, data) == 0.75);
}
