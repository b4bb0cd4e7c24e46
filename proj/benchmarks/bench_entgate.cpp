#include <benchmark/benchmark.h>

#include "entgate/criterion.hpp"
#include "entgate/generate.hpp"
#include "entgate/ketparse.hpp"
#include "entgate/oracle.hpp"

namespace {

using namespace entgate;

SparseState random_state(std::uint64_t seed, int n, std::size_t m) {
  Rng rng(seed);
  const auto support = gen_random(rng, n, m);
  std::vector<Term> terms;
  for (const auto& t : support.terms()) terms.push_back({t.basis, random_scalar(rng)});
  return SparseState(n, std::move(terms));
}

// Redraws until no qubit is constant, so the oracle scans every cut.
SparseState oracle_input(int n) {
  for (std::uint64_t seed = 1;; ++seed) {
    auto s = random_state(seed, n, 6);
    if (constant_qubits(s).empty()) return s;
  }
}

void BM_OracleClassify(benchmark::State& state) {
  const auto s = oracle_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_classify(s));
}
BENCHMARK(BM_OracleClassify)->Arg(10)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ClassifySeparable(benchmark::State& state) {
  Rng rng(2);
  const auto s = gen_separable(rng, 12, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s));
}
BENCHMARK(BM_ClassifySeparable)->Arg(6)->Arg(10)->Arg(14);

void BM_ClassifyRandom(benchmark::State& state) {
  const auto s = random_state(3, 40, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s));
}
BENCHMARK(BM_ClassifyRandom)->Arg(6)->Arg(10)->Arg(14);

void BM_ParseRender(benchmark::State& state) {
  const std::string text = render_state(random_state(4, 16, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parse_state(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseRender)->Arg(6)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
