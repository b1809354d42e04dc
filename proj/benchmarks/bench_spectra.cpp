#include <random>

#include <benchmark/benchmark.h>

#include "scatfact/explorer.hpp"
#include "scatfact/reconstruct.hpp"
#include "scatfact/spectrum.hpp"

using namespace scatfact;

namespace {

BinaryWord random_word(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WordBuilder b;
  for (std::size_t t = 0; t < n; ++t) b.add(rng() & 1 ? Symbol::b : Symbol::a);
  return b.build();
}

void BM_CardinalityDP(benchmark::State& st) {
  const auto k = static_cast<std::size_t>(st.range(0));
  auto w = random_word(2 * k, k);
  for (auto _ : st) benchmark::DoNotOptimize(spectrum_cardinality(w, k));
}
BENCHMARK(BM_CardinalityDP)->DenseRange(4, 20, 4);

void BM_SpectrumSet(benchmark::State& st) {
  const auto k = static_cast<std::size_t>(st.range(0));
  auto w = random_word(2 * k, k);
  for (auto _ : st) benchmark::DoNotOptimize(spectrum(w, k).size());
}
BENCHMARK(BM_SpectrumSet)->DenseRange(4, 20, 4);

void BM_LongWordDP(benchmark::State& st) {
  auto w = random_word(static_cast<std::size_t>(st.range(0)), 7);
  for (auto _ : st) benchmark::DoNotOptimize(spectrum_cardinality(w, 32));
}
BENCHMARK(BM_LongWordDP)->RangeMultiplier(4)->Range(64, 4096);

void BM_AchievableCardinalities(benchmark::State& st) {
  ExplorerOptions o;
  o.orbits = st.range(1) != 0;
  o.jobs = 1;
  for (auto _ : st) benchmark::DoNotOptimize(achievable_cardinalities(static_cast<std::size_t>(st.range(0)), o));
}
BENCHMARK(BM_AchievableCardinalities)->Args({6, 0})->Args({6, 1})->Args({8, 1})->Unit(benchmark::kMillisecond);

void BM_ReconstructTwoBlocks(benchmark::State& st) {
  const auto k = static_cast<std::size_t>(st.range(0));
  auto w = WordBuilder{}.add(Symbol::a, 1).add(Symbol::b, k / 2).add(Symbol::a, k / 2).add(Symbol::b, k - k / 2).add(Symbol::a, k - 1 - k / 2).build();
  for (auto _ : st) {
    auto q = real_oracle(w, two_block_query_length(k), true);
    benchmark::DoNotOptimize(reconstruct_two_blocks(q, k));
  }
}
BENCHMARK(BM_ReconstructTwoBlocks)->Arg(6)->Arg(10)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
