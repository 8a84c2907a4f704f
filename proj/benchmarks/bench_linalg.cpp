#include <benchmark/benchmark.h>

#include "bench_data.hpp"
#include "mcurve/syzygy/graded_maps.hpp"
#include "mcurve/syzygy/linalg.hpp"
#include "mcurve/syzygy/rank_engine.hpp"

using namespace mcurve;

namespace {

// Jacobian map of the third fixture in the first degree of its
// stabilization window.
IntMatrix window_matrix() {
  const JacobianData data(defining_form(bench_arrangement("cl3.txt")));
  const int d = data.degree();
  return data.jacobian_map(3 * d - 6 - (d - 1));
}

}  // namespace

static void BM_RankModP(benchmark::State& state) {
  const IntMatrix m = window_matrix();
  const auto p = random_primes(kDefaultSeed, 1).front();
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m, p));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}
BENCHMARK(BM_RankModP)->Unit(benchmark::kMillisecond);

static void BM_CertifiedRank(benchmark::State& state) {
  const IntMatrix m = window_matrix();
  for (auto _ : state) {
    RankEngine engine;
    benchmark::DoNotOptimize(engine.rank(m, true));
  }
}
BENCHMARK(BM_CertifiedRank)->Unit(benchmark::kMillisecond);

static void BM_RankExact(benchmark::State& state) {
  const IntMatrix m = window_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_RankExact)->Unit(benchmark::kMillisecond)->Iterations(1);
