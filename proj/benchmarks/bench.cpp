#include <benchmark/benchmark.h>

#include <random>

#include "tsgraph/equivalence.hpp"
#include "tsgraph/marginal.hpp"
#include "tsgraph/separation.hpp"

namespace {

using namespace tsgraph;

// Template with `n` variables, the last one latent, and edges at every lag
// up to 2 drawn with a fixed seed.
TsDagTemplate bench_template(int n) { return random_ts_dag(n, 2, 0.35, 1234u + static_cast<unsigned>(n)); }

ObservationScheme bench_scheme(int n, int tau_max) {
  std::vector<int> observed;
  for (int i = 0; i + 1 < n; ++i) observed.push_back(i);
  return {observed, tau_max, 1};
}

void BM_TsDmag(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int tau = static_cast<int>(state.range(1));
  const TsDagTemplate t = bench_template(n);
  const ObservationScheme s = bench_scheme(n, tau);
  for (auto _ : state) benchmark::DoNotOptimize(ts_dmag(t, s));
}
BENCHMARK(BM_TsDmag)->ArgsProduct({{3, 4, 6}, {2, 4, 8}});

void BM_DSepTsDag(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TsDagTemplate t = bench_template(n);
  const InfiniteSeparation sep(t);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> var(0, n - 1), time(-4, 0);
  std::vector<SepQuery> queries;
  while (queries.size() < 64) {
    SepQuery q{{var(rng), time(rng)}, {var(rng), time(rng)}, {{var(rng), time(rng)}}};
    if (q.x != q.y && q.cond[0] != q.x && q.cond[0] != q.y) queries.push_back(q);
  }
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sep.separated(queries[k++ % queries.size()]));
}
BENCHMARK(BM_DSepTsDag)->Arg(3)->Arg(5)->Arg(8);

void BM_DSepTsDagSetup(benchmark::State& state) {
  const TsDagTemplate t = bench_template(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(InfiniteSeparation(t));
}
BENCHMARK(BM_DSepTsDagSetup)->Arg(3)->Arg(5)->Arg(8);

void BM_EnumerateClass(benchmark::State& state) {
  const auto k = static_cast<Knowledge>(state.range(0));
  const TsDagTemplate t(3, {{0, 0, 1}, {0, 1, 1}, {2, 0, 0}, {2, 1, 0}, {1, 1, 1}});
  const WindowGraph m = ts_dmag(t, {{0, 1}, 2, 1});
  state.counters["edges"] = static_cast<double>(m.num_edges());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_class(m, k, 16));
}
BENCHMARK(BM_EnumerateClass)
    ->Arg(static_cast<int>(Knowledge::None))
    ->Arg(static_cast<int>(Knowledge::TimeOrderAncestral))
    ->Arg(static_cast<int>(Knowledge::TsDag))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
