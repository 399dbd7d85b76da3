#include <benchmark/benchmark.h>

#include "linclon/kernels.hpp"

using namespace linclon;

namespace {

ProductRing ring(std::initializer_list<std::uint32_t> primes) { return prime_ring(primes); }

std::vector<FiniteFunction> sample_generators(const ProductRing& K, const ProductRing& F) {
  FiniteFunction g(K, F, 2);
  for (PointIndex x = 0; x < g.size(); ++x) g.component(0)[x] = static_cast<std::uint32_t>((x * 7 + 3) % 2);
  return {g};
}

void BM_SubstitutionSpan(benchmark::State& state, bool omp) {
  const ProductRing K = ring({3}), F = ring({2});
  const auto gens = sample_generators(K, F);
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto parts = omp ? kernels::substitution_span_omp(K, F, gens, k) : kernels::substitution_span_serial(K, F, gens, k);
    benchmark::DoNotOptimize(parts);
  }
}

void BM_CyclicSpans(benchmark::State& state, bool omp) {
  const ProductRing K = ring({2, 5});
  for (auto _ : state) {
    auto spans = omp ? kernels::cyclic_spans_omp(K, 3) : kernels::cyclic_spans_serial(K, 3);
    benchmark::DoNotOptimize(spans);
  }
}

void BM_InvariantSubspaces(benchmark::State& state, bool omp) {
  const ProductRing K = ring({5});
  for (auto _ : state) {
    auto subs = omp ? kernels::invariant_subspaces_omp(K, 2) : kernels::invariant_subspaces_serial(K, 2);
    benchmark::DoNotOptimize(subs);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_SubstitutionSpan, serial, false)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_SubstitutionSpan, omp, true)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_CyclicSpans, serial, false);
BENCHMARK_CAPTURE(BM_CyclicSpans, omp, true);
BENCHMARK_CAPTURE(BM_InvariantSubspaces, serial, false);
BENCHMARK_CAPTURE(BM_InvariantSubspaces, omp, true);

BENCHMARK_MAIN();
