#include <benchmark/benchmark.h>

#include "commands.hpp"
#include "qaran/qaran.hpp"

using namespace qaran;

namespace {

const CellScenario k400x64{400, 6, 0.5, 64, 1, 1};

void BM_Workload(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(workload(k400x64).total());
}
BENCHMARK(BM_Workload);

void BM_TotalBudget(benchmark::State& state) {
  const auto qa = QaProfile::projected();
  for (auto _ : state) benchmark::DoNotOptimize(total_budget(k400x64, qa, 20).total);
}
BENCHMARK(BM_TotalBudget);

void BM_CompareCran(benchmark::State& state) {
  const auto node = builtin_cmos_profile("14nm");
  const auto qa = QaProfile::projected();
  const auto topo = Topology::cran(3);
  for (auto _ : state) benchmark::DoNotOptimize(compare(k400x64, node, qa, 20, topo).delta_w());
}
BENCHMARK(BM_CompareCran);

void BM_Crossover(benchmark::State& state) {
  const auto node = builtin_cmos_profile("14nm");
  const auto qa = QaProfile::projected();
  for (auto _ : state) benchmark::DoNotOptimize(crossover_bandwidth(static_cast<int>(state.range(0)), node, qa));
}
BENCHMARK(BM_Crossover)->Arg(1)->Arg(64)->Arg(256);

void BM_YearAvailable(benchmark::State& state) {
  const auto best = GrowthTrend::best_case();
  for (auto _ : state) benchmark::DoNotOptimize(year_available(best, 1'850'000));
}
BENCHMARK(BM_YearAvailable);

// Power sweep over a bandwidth x antenna grid, rendered to CSV.
void BM_PowerSweep(benchmark::State& state) {
  cli::RunConfig cfg;
  cli::apply_sweep_flag(cfg.sweep, "bandwidth=10:1000:10");
  cli::apply_sweep_flag(cfg.sweep, "antennas=32,64,128,256");
  const cli::RunOptions opts{"power", std::nullopt, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(cli::render_csv(cli::run_command(cfg, opts).report).size());
}
BENCHMARK(BM_PowerSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
