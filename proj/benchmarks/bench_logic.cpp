// Encoding and solving costs on the propositional side.

#include <benchmark/benchmark.h>

#include <vector>

#include "tsmv/cnf.hpp"
#include "tsmv/encode.hpp"
#include "tsmv/formula.hpp"
#include "tsmv/model.hpp"
#include "tsmv/rng.hpp"
#include "tsmv/seq_counter.hpp"
#include "tsmv/solver.hpp"
#include "tsmv/tseitin.hpp"
#include "tsmv/varpool.hpp"
#include "tsmv/verify.hpp"

using namespace tsmv;

namespace {

TsmModel random_model(int n_vars, int per_side, uint64_t seed) {
  SplitMix64 rng(seed);
  TsmModel m;
  m.n_vars = n_vars;
  m.hp = {100, per_side, 3.9};
  for (int side = 0; side < 2; ++side) {
    for (int j = 0; j < per_side; ++j) {
      Monomial mono;
      const int len = static_cast<int>(rng.below(n_vars + 1));
      for (int k = 0; k < len; ++k) {
        mono.add({1 + static_cast<int>(rng.below(n_vars)),
                  rng.below(2) == 0});
      }
      (side == 0 ? m.positive : m.negative).push_back(mono);
    }
  }
  return m;
}

// holes+1 pigeons into `holes` holes; unsatisfiable, resolution-hard.
Cnf pigeonhole(int holes) {
  Cnf c;
  auto var = [&](int p, int h) { return p * holes + h + 1; };
  for (int p = 0; p <= holes; ++p) {
    std::vector<int> some;
    for (int h = 0; h < holes; ++h) some.push_back(var(p, h));
    c.add_clause(std::move(some));
  }
  for (int h = 0; h < holes; ++h) {
    for (int p = 0; p <= holes; ++p) {
      for (int q = p + 1; q <= holes; ++q) {
        c.add_clause({-var(p, h), -var(q, h)});
      }
    }
  }
  return c;
}

void BM_SeqCounter(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VarPool pool;
    std::vector<FormulaRef> lits;
    for (int i = 1; i <= l; ++i) {
      lits.push_back(mk_var(pool.var("in:" + std::to_string(i))));
    }
    benchmark::DoNotOptimize(seq_counter(lits, l / 2, pool, "c"));
  }
}
BENCHMARK(BM_SeqCounter)->Arg(16)->Arg(64)->Arg(256);

void BM_EncodeMachine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int per_side = static_cast<int>(state.range(1));
  TsmModel m = random_model(n, per_side, 11);
  for (auto _ : state) {
    VarPool pool;
    benchmark::DoNotOptimize(encode_tsm(m, pool));
  }
}
BENCHMARK(BM_EncodeMachine)->Args({16, 10})->Args({64, 50})->Args({256, 100});

void BM_RobustnessToCnf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  TsmModel m = random_model(n, 50, 12);
  BitInput in(std::vector<uint8_t>(n, 0));
  for (auto _ : state) {
    VarPool pool;
    FormulaRef f = build_notrob(m, in, 1, pool);
    Cnf cnf = tseitin(f, pool).cnf;
    benchmark::DoNotOptimize(cnf);
    state.counters["vars"] = cnf.var_count;
    state.counters["clauses"] = static_cast<double>(cnf.clauses.size());
  }
}
BENCHMARK(BM_RobustnessToCnf)->Arg(64)->Arg(256);

void BM_SolvePigeonhole(benchmark::State& state) {
  Cnf c = pigeonhole(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_embedded(c));
  }
}
BENCHMARK(BM_SolvePigeonhole)->Arg(5)->Arg(6)->Arg(7);

void BM_SolveRandom3Sat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(13);
  std::vector<Cnf> pool;
  for (int i = 0; i < 20; ++i) {
    Cnf c;
    c.var_count = n;
    for (int j = 0; j < 4 * n; ++j) {
      std::vector<int> cl;
      for (int k = 0; k < 3; ++k) {
        int v = 1 + static_cast<int>(rng.below(n));
        cl.push_back(rng.below(2) ? v : -v);
      }
      c.add_clause(std::move(cl));
    }
    pool.push_back(std::move(c));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_embedded(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_SolveRandom3Sat)->Arg(30)->Arg(50);

}  // namespace
