#include <benchmark/benchmark.h>

#include <random>

#include "confequiv/amenability.hpp"
#include "confequiv/configuration.hpp"
#include "confequiv/equivalence.hpp"
#include "confequiv/finite_group.hpp"
#include "confequiv/free_group.hpp"
#include "confequiv/k_element.hpp"

using namespace confequiv;

namespace {

KElement sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-4, 4), c(-5, 5);
  KElement x;
  x.a = e(rng);
  for (int i = 0; i < 3; ++i) {
    x.B += LaurentPoly::monomial(e(rng), c(rng));
    x.C += LaurentPoly::monomial(e(rng), c(rng));
    x.D += LaurentPoly::monomial(e(rng), c(rng));
  }
  return x;
}

void BM_KMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto x = sample(rng), y = sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(k_mul(x, y));
}
BENCHMARK(BM_KMul);

void BM_Catalog(benchmark::State& state) {
  const auto g = named_group(state.range(0) == 0 ? "D4" : "Q8");
  for (auto _ : state) benchmark::DoNotOptimize(catalog(g, {2, 4}, ConfigKind::one_sided));
}
BENCHMARK(BM_Catalog)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SolveFinite(benchmark::State& state) {
  const auto g = named_group("Z8");
  const std::vector<FiniteIndex> gens{1};
  const AmenabilitySystem system(configurations(g, gens, Partition::singletons(8)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(system));
}
BENCHMARK(BM_SolveFinite);

void BM_SolveFreeFirstLetter(benchmark::State& state) {
  const FreeGroup f2(2);
  const AmenabilitySystem system(
      stabilized_configurations(f2, f2.default_generators(), first_letter_partition(2), 4, 2));
  for (auto _ : state) benchmark::DoNotOptimize(solve(system));
}
BENCHMARK(BM_SolveFreeFirstLetter);

}  // namespace

BENCHMARK_MAIN();
