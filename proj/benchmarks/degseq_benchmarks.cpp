#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "degseq/canonical.hpp"
#include "degseq/construction.hpp"
#include "degseq/oracle.hpp"
#include "degseq/sequence.hpp"

using namespace degseq;

namespace {

std::vector<std::uint64_t> random_codes(std::size_t n, std::size_t count) {
  std::mt19937_64 rng(7);
  const std::uint64_t mask = (std::uint64_t{1} << pair_count(n)) - 1;
  std::vector<std::uint64_t> codes(count);
  for (auto& c : codes) c = rng() & mask;
  return codes;
}

void BM_CanonicalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto codes = random_codes(n, 256);
  std::size_t k = 0;
  for (auto _ : state) {
    const BitGraph g = BitGraph::from_code(n, codes[k++ % codes.size()]);
    benchmark::DoNotOptimize(canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 8, 2);

void BM_IsCanonicalScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t hits = 0;
    for_each_code(n, 0, [&](std::uint64_t code) { hits += is_canonical_code(n, code); });
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_IsCanonicalScan)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_CellCensus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cell_census(n));
}
BENCHMARK(BM_CellCensus)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_RealizationTallies(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(realization_tallies(n, 1));
}
BENCHMARK(BM_RealizationTallies)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_RealizeConnected(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  // Mostly degree-2 sequence, which exercises the component merge step.
  std::vector<DegreeSequence::Term> terms(n, 2);
  terms.back() = 1;
  terms[n - 2] = 1;
  const DegreeSequence s(terms);
  for (auto _ : state) benchmark::DoNotOptimize(realize_connected(s));
}
BENCHMARK(BM_RealizeConnected)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
