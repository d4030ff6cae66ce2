#include <random>

#include <benchmark/benchmark.h>

#include "stochstab/hub.hpp"
#include "stochstab/transforms.hpp"
#include "support/fixtures.hpp"

using namespace stochstab;
using namespace stochstab::test;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::reference : Execution::parallel;
}

void BM_Shrink(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto g = random_scaled_graph(rng, static_cast<std::size_t>(state.range(0)), 0.2, 0.02);
  const auto s = essential_structure(g);
  const auto exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(shrink(g, s, exec));
  state.SetLabel(exec == Execution::reference ? "reference" : "parallel");
}

void BM_Hub(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  // Distinct exponents keep the recursion about n levels deep.
  auto g = Graph::from_names(state_names(n));
  std::uniform_int_distribution<std::int64_t> p(1, 1000000);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) g.set_weight(u, v, MC::exp(Rational(p(rng), 1000)));
  const HubOptions options{mode(state), false};
  for (auto _ : state) benchmark::DoNotOptimize(hub(g, options));
  state.SetLabel(options.execution == Execution::reference ? "reference" : "parallel");
}

}  // namespace

BENCHMARK(BM_Shrink)->ArgsProduct({{32, 64, 128}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hub)->ArgsProduct({{50, 100, 200}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
