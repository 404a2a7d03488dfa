#include <benchmark/benchmark.h>

#include <ybdeform/brace.hpp>
#include <ybdeform/deform.hpp>
#include <ybdeform/groups.hpp>
#include <ybdeform/heap.hpp>
#include <ybdeform/solution.hpp>

// Microbenchmarks for the hot exhaustive scans: the cubic braid check, the
// distributor membership scan, table classification, heap axiom
// verification, and the factorial equivalence search.

namespace {

using namespace ybdeform;

const WeakBrace& product24() {
  static const WeakBrace w =
      product_brace(sandwich_units_brace(8), rump_mod_brace(6));
  return w;
}

void BM_BraidScan24(benchmark::State& state) {
  const PairMap r = canonical_solution(product24());
  for (auto _ : state) benchmark::DoNotOptimize(check_braid(r).holds);
}
BENCHMARK(BM_BraidScan24);

void BM_DeformedSolution24(benchmark::State& state) {
  const WeakBrace& w = product24();
  for (auto _ : state) benchmark::DoNotOptimize(deformed_solution(w, 3));
}
BENCHMARK(BM_DeformedSolution24);

void BM_DistributorScan24(benchmark::State& state) {
  const WeakBrace& w = product24();
  for (auto _ : state) benchmark::DoNotOptimize(right_distributor(w));
}
BENCHMARK(BM_DistributorScan24);

void BM_ClassifySymmetric4(benchmark::State& state) {
  const CayleyTable t = symmetric_table(4).table;
  for (auto _ : state) benchmark::DoNotOptimize(classify(t));
}
BENCHMARK(BM_ClassifySymmetric4);

void BM_HeapVerify16(benchmark::State& state) {
  const Heap h = heap_of_group(cyclic_table(16).table);
  std::vector<Elem> entries;
  const int n = 16;
  entries.reserve(n * n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) entries.push_back(h.tern(a, b, c));
  for (auto _ : state)
    benchmark::DoNotOptimize(Heap::verify(n, entries));
}
BENCHMARK(BM_HeapVerify16);

void BM_EquivalenceSearchNone8(benchmark::State& state) {
  // A twist against a twist with one corrupted sigma entry: no bijection
  // intertwines them, so the search visits all 8! permutations.
  const PairMap t = twist_map(8);
  std::vector<Elem> sigma = t.sigma_entries(), tau = t.tau_entries();
  std::swap(sigma[0], sigma[1]);
  const PairMap s(8, sigma, tau);
  for (auto _ : state) benchmark::DoNotOptimize(find_equivalence(t, s));
}
BENCHMARK(BM_EquivalenceSearchNone8);

}  // namespace

BENCHMARK_MAIN();
