#include <benchmark/benchmark.h>

#include "bench_data.hpp"
#include "mcurve/cli_io/commands.hpp"
#include "mcurve/syzygy/syzygy.hpp"

using namespace mcurve;

static const char* const kFixtures[] = {"cl1.txt", "cl2.txt", "cl3.txt", "st.txt"};

static void BM_SingularPoints(benchmark::State& state) {
  const Arrangement arr = bench_arrangement(kFixtures[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(arr));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_SingularPoints)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_SyzygyReport(benchmark::State& state) {
  const HForm f = defining_form(bench_arrangement(kFixtures[state.range(0)]));
  const auto mode = state.range(1) == 0 ? RankMode::ModularCertified : RankMode::Exact;
  for (auto _ : state) {
    RankEngine engine(mode);
    benchmark::DoNotOptimize(JacobianSyzygies(f, engine).report());
  }
  state.SetLabel(std::string(kFixtures[state.range(0)]) + (state.range(1) == 0 ? " modular" : " exact"));
}
BENCHMARK(BM_SyzygyReport)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_CertifyCommand(benchmark::State& state) {
  const auto doc = parse_arrangement(bench_read("cl3.txt"));
  for (auto _ : state) benchmark::DoNotOptimize(cmd_certify(doc, RunOptions{}).exit_code);
}
BENCHMARK(BM_CertifyCommand)->Unit(benchmark::kMillisecond);

static void BM_ParseSerialize(benchmark::State& state) {
  const std::string text = bench_read("cl3.txt");
  for (auto _ : state) benchmark::DoNotOptimize(serialize_arrangement(parse_arrangement(text).arrangement));
}
BENCHMARK(BM_ParseSerialize);
BENCHMARK_MAIN();
