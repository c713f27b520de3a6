#include "smtkit/involutions.hpp"
#include "smtkit/quadlat.hpp"
#include "smtkit/smt.hpp"

#include <benchmark/benchmark.h>

using namespace smtkit;

static void BM_ClassifyQuadratic(benchmark::State& state) {
  const FinTypeLabel l{Family::A, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(classify_quadratic(l));
}
BENCHMARK(BM_ClassifyQuadratic)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_WeylDimE8(benchmark::State& state) {
  const GCM m = build_cartan({Family::E, 8});
  const WeightVec rho = WeightVec::from_ints(m.id(), std::vector<int>(8, 1));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_dim(m, rho));
}
BENCHMARK(BM_WeylDimE8);

static void BM_DemazureC3(benchmark::State& state) {
  const Realization r(build_cartan({Family::C, 3}));
  const WeightVec lam = WeightVec::from_ints(r.gcm().id(), std::vector{1, 1, 1});
  const Word w = longest_element(r, std::vector{0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(demazure_character(r, w, lam));
}
BENCHMARK(BM_DemazureC3)->Unit(benchmark::kMillisecond);

static void BM_EnumeratePathsB3(benchmark::State& state) {
  const Realization r(build_cartan({Family::B, 3}));
  const WeightVec lam = WeightVec::from_ints(r.gcm().id(), std::vector{1, 1, 1});
  const WeightVec top = act(r, longest_element(r, std::vector{0, 1, 2}), lam);
  for (auto _ : state) benchmark::DoNotOptimize(PathModel(r, lam, top).count());
}
BENCHMARK(BM_EnumeratePathsB3)->Unit(benchmark::kMillisecond);

static void BM_GradedCountSp4(benchmark::State& state) {
  const AmbientModel model = AmbientModel::flip({Family::C, 2});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_count(model, 2, n, true));
}
BENCHMARK(BM_GradedCountSp4)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

static void BM_E7Pairs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_standard_pairs(minuscule_poset(FinTypeLabel{Family::E, 7}, 6)));
}
BENCHMARK(BM_E7Pairs)->Unit(benchmark::kMillisecond);

static void BM_StraightenE7(benchmark::State& state) {
  const StraighteningSystem s = e7_system(e7_data());
  const Monomial m = s.monomial({"x5", "y5", "x5", "y5"});
  for (auto _ : state) benchmark::DoNotOptimize(s.straighten(m));
}
BENCHMARK(BM_StraightenE7);

static void BM_CatalogSweep(benchmark::State& state) {
  for (auto _ : state) {
    int agree = 0;
    for (const auto& rec : InvolutionCatalog::builtin().instances(6))
      if (rec.restricted.type.rank <= 4) agree += quadratic_verdict(rec.restricted) == quadratic_rule(rec.restricted);
    benchmark::DoNotOptimize(agree);
  }
}
BENCHMARK(BM_CatalogSweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
