#include <benchmark/benchmark.h>

#include "cotlar_lab/cotlar.hpp"
#include "cotlar_lab/ncfourier.hpp"
#include "cotlar_lab/psl2.hpp"

using namespace cotlab;

static void BM_Enumerate(benchmark::State& state) {
  const RingParam ring = RingParam::full(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(ring, 2));
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CotlarPairSweep(benchmark::State& state) {
  const RingParam ring = RingParam::full(2);
  const auto elems = enumerate(ring, 2);
  std::int64_t acc = 0;
  for (auto _ : state) {
    for (std::size_t i = 0; i < 64; ++i) {
      for (const auto& h : elems) acc += cotlar_residual(elems[i], h);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 64 * static_cast<std::int64_t>(elems.size()));
}
BENCHMARK(BM_CotlarPairSweep)->Unit(benchmark::kMillisecond);

static void BM_Convolve(benchmark::State& state) {
  const RingParam ring = RingParam::full(2);
  const auto box = enumerate(ring, 2);
  const auto gens = standard_generators(ring);
  std::mt19937_64 rng(7);
  const auto size = static_cast<std::size_t>(state.range(0));
  const AlgElem x = random_alg_elem(box, gens, size, rng);
  const AlgElem y = random_alg_elem(box, gens, size, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(x, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Convolve)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK_MAIN();
