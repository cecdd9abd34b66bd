#include <benchmark/benchmark.h>

#include <random>

#include "cec/assignment.hpp"
#include "cec/load_optimizer.hpp"
#include "cec/mds.hpp"
#include "cec/report_io.hpp"
#include "cec/sim.hpp"
#include "test_scenarios.hpp"

using namespace cec;

static void BM_SolveLoad(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::vector<Scenario> instances;
  for (int i = 0; i < 64; ++i)
    instances.push_back(cec::testing::random_instance(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const Scenario& sc = instances[i++ % instances.size()];
    benchmark::DoNotOptimize(solve_load(sc, sc.events[0]));
  }
}
BENCHMARK(BM_SolveLoad);

static void BM_Fill(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::vector<std::pair<LoadVector, int>> inputs;
  for (int i = 0; i < 64; ++i) {
    int L = 0;
    LoadVector mu = cec::testing::random_feasible_loads(rng, L);
    inputs.emplace_back(std::move(mu), L);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [mu, L] = inputs[i++ % inputs.size()];
    benchmark::DoNotOptimize(fill(mu, L));
  }
}
BENCHMARK(BM_Fill);

static void BM_Encode(benchmark::State& state) {
  const std::int64_t q = state.range(0);
  Scenario sc = cec::testing::example1(q, 8);
  FieldMatrix X = random_matrix(7, q, 8, kDefaultPrime);
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode_store(sc, X));
  }
  state.SetItemsProcessed(state.iterations() * q * 8);
}
BENCHMARK(BM_Encode)->Arg(105)->Arg(1050)->Arg(10500);

static void BM_RunStep(benchmark::State& state) {
  const std::int64_t q = state.range(0);
  Scenario sc = cec::testing::example1(q, 8);
  FieldMatrix X = random_matrix(7, q, 8, kDefaultPrime);
  auto w = random_vectors(7, 1, 8, kDefaultPrime);
  CodedStore store = encode_store(sc, X);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_step(sc, store, sc.events[0], X, w[0]));
  }
}
BENCHMARK(BM_RunStep)->Arg(105)->Arg(1050);

BENCHMARK_MAIN();
