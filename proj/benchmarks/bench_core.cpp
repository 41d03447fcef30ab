#include <benchmark/benchmark.h>

#include "pptes/builders.hpp"
#include "pptes/equivalence.hpp"
#include "pptes/finder.hpp"
#include "pptes/invariants.hpp"
#include "pptes/subspace.hpp"

namespace {

using namespace pptes;

const CanonicalParams kParams{1.3, 0.8, 2.4, 0.6};

void bm_construct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(omega(kParams));
}
BENCHMARK(bm_construct);

void bm_is_ppt(benchmark::State& state) {
  const BipartiteState s = omega(kParams);
  for (auto _ : state) benchmark::DoNotOptimize(s.is_ppt());
}
BENCHMARK(bm_is_ppt);

void bm_kernel_finder(benchmark::State& state) {
  const BipartiteState s = omega(kParams);
  for (auto _ : state) {
    const auto res = find_product_vectors(SubspaceSpec::kernel_of(s));
    benchmark::DoNotOptimize(res.vectors.size());
  }
}
BENCHMARK(bm_kernel_finder);

void bm_symbol_census(benchmark::State& state) {
  const auto six = kernel_product_vectors(omega(kParams));
  for (auto _ : state) benchmark::DoNotOptimize(symbol_census(six).size());
}
BENCHMARK(bm_symbol_census);

void bm_is_equivalent(benchmark::State& state) {
  const BipartiteState a = omega(kParams);
  const BipartiteState b = omega({1.1, 0.9, 2.0, 0.7});
  for (auto _ : state) benchmark::DoNotOptimize(is_equivalent(a, b).equivalent);
}
BENCHMARK(bm_is_equivalent);

void bm_canonicalize(benchmark::State& state) {
  const BipartiteState s = choi_state({0.5});
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(s).params.a);
}
BENCHMARK(bm_canonicalize);

}  // namespace

BENCHMARK_MAIN();
