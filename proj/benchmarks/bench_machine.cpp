// Training throughput and end-to-end verification latency.

#include <benchmark/benchmark.h>

#include "tsmv/digits.hpp"
#include "tsmv/model.hpp"
#include "tsmv/train.hpp"
#include "tsmv/verify.hpp"

using namespace tsmv;

namespace {

const DigitSet& digit_data() {
  static DigitSet data = [] {
    DigitSetConfig cfg;
    cfg.train_count = 300;
    cfg.test_count = 60;
    cfg.seed = 7;
    return make_digit_set(cfg);
  }();
  return data;
}

const TsmModel& digit_machine() {
  static TsmModel m = [] {
    TrainConfig cfg;
    cfg.n_monomials = 100;
    cfg.num_states = 256;
    cfg.margin = 15;
    cfg.specificity = 5.0;
    cfg.epochs = 60;
    cfg.seed = 2;
    return train(digit_data().train, cfg);
  }();
  return m;
}

void BM_TrainEpochs(benchmark::State& state) {
  TrainConfig cfg;
  cfg.n_monomials = 100;
  cfg.num_states = 256;
  cfg.margin = 15;
  cfg.specificity = 5.0;
  cfg.epochs = static_cast<int>(state.range(0));
  cfg.seed = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(train(digit_data().train, cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.epochs *
                          digit_data().train.size());
}
BENCHMARK(BM_TrainEpochs)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const TsmModel& m = digit_machine();
  const Dataset& test = digit_data().test;
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(m, test[i++ % test.size()]));
  }
}
BENCHMARK(BM_Classify);

void BM_CheckRobust(benchmark::State& state) {
  const TsmModel& m = digit_machine();
  const Dataset& test = digit_data().test;
  const int eps = static_cast<int>(state.range(0));
  size_t i = 0;
  for (auto _ : state) {
    Verdict v = check_robust(m, test[i++ % test.size()], eps);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_CheckRobust)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CheckEquivalence(benchmark::State& state) {
  const TsmModel& m = digit_machine();
  for (auto _ : state) {
    Verdict v = check_equivalence(m, m);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_CheckEquivalence)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
