#include <benchmark/benchmark.h>

#include "lawvere/closure.hpp"
#include "lawvere/fuzzy.hpp"

using namespace lawvere;

namespace {

const char* const kShapes[] = {"graph", "reflgraph", "bicolor", "semi2", "sset2", "semi3", "sset3"};

void BM_OmegaBuild(benchmark::State& state) {
  auto cat = FiniteIndexCategory::build(kShapes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(OmegaObject::build(cat));
  state.SetLabel(kShapes[state.range(0)]);
}
BENCHMARK(BM_OmegaBuild)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_TopologiesConstrained(benchmark::State& state) {
  auto om = OmegaObject::build(FiniteIndexCategory::build(kShapes[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(om, EnumerationMethod::Constrained));
  state.SetLabel(kShapes[state.range(0)]);
}
BENCHMARK(BM_TopologiesConstrained)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_TopologiesBrute(benchmark::State& state) {
  auto om = OmegaObject::build(FiniteIndexCategory::build(kShapes[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(om, EnumerationMethod::Brute));
  state.SetLabel(kShapes[state.range(0)]);
}
BENCHMARK(BM_TopologiesBrute)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

// Every subobject of every corpus presheaf, closed both ways.
void BM_ClosureCorpus(benchmark::State& state) {
  auto om = OmegaObject::build(FiniteIndexCategory::build("semi2"));
  auto corpus = factorization_corpus(om->category_ptr(), static_cast<int>(state.range(0)));
  auto j = construct_jw(om, "011");
  std::vector<std::pair<int, Subpresheaf>> subs;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (auto& s : enumerate_subpresheaves(corpus[i])) subs.emplace_back(static_cast<int>(i), std::move(s));
  const bool chi = state.range(1) != 0;
  for (auto _ : state)
    for (const auto& [i, s] : subs)
      benchmark::DoNotOptimize(chi ? closure_via_chi(j, corpus[i], s) : closure_recursive("011", corpus[i], s));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * subs.size()));
  state.SetLabel(chi ? "chi" : "recursive");
}
BENCHMARK(BM_ClosureCorpus)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Nuclei(benchmark::State& state) {
  auto L = std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nuclei(L));
}
BENCHMARK(BM_Nuclei)->DenseRange(3, 8);

void BM_FuzzyClosure(benchmark::State& state) {
  auto L = std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::chain(5));
  auto op = QClosureOperator::induced(L, {2, 2, 2, 3, 4});
  auto corpus = fuzzy_corpus(L, 3);
  for (auto _ : state)
    for (const auto& A : corpus)
      for (const auto& s : enumerate_fuzzy_subsets(A)) benchmark::DoNotOptimize(fuzzy_closure(op, A, s));
}
BENCHMARK(BM_FuzzyClosure)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
