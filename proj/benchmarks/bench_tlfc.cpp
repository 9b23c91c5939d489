#include <benchmark/benchmark.h>

#include "tlfc/bijection.hpp"
#include "tlfc/counting.hpp"
#include "tlfc/diagram.hpp"
#include "tlfc/fc_element.hpp"
#include "tlfc/tl_algebra.hpp"

using namespace tlfc;

namespace {

void BM_EnumerateFc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fc(n));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(catalan(n + 1)));
}
BENCHMARK(BM_EnumerateFc)->DenseRange(6, 10, 2);

// Direct drawing against the concatenation of generators, over all elements.
void BM_FcToDiagram(benchmark::State& state) {
  const auto all = enumerate_fc(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const FCElement& w : all) benchmark::DoNotOptimize(fc_to_diagram(w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_FcToDiagram)->Arg(6)->Arg(8);

void BM_FcToDiagramReference(benchmark::State& state) {
  const auto all = enumerate_fc(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const FCElement& w : all) benchmark::DoNotOptimize(fc_to_diagram_reference(w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_FcToDiagramReference)->Arg(6)->Arg(8);

void BM_Concatenate(benchmark::State& state) {
  const auto all = enumerate_diagrams(static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(concatenate(all[k % all.size()], all[(k * 7 + 3) % all.size()]));
    ++k;
  }
}
BENCHMARK(BM_Concatenate)->Arg(6)->Arg(12);

void BM_MonomialProduct(benchmark::State& state) {
  const auto all = enumerate_fc(static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(monomial_product(all[k % all.size()], all[(k * 7 + 3) % all.size()]));
    ++k;
  }
}
BENCHMARK(BM_MonomialProduct)->Arg(5)->Arg(9);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(n, n / 2));
}
BENCHMARK(BM_Census)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
