// Serial reference vs OpenMP kernels: event generation, JES fill, model map.
#include <benchmark/benchmark.h>

#include "atl/analysis.hpp"
#include "atl/config.hpp"
#include "atl/eventgen.hpp"
#include "atl/model.hpp"

namespace {

atl::config::RunConfig bench_config() {
  auto cfg = atl::config::default_config();
  cfg.events_total = 200000;
  cfg.delay_count = 16;
  cfg.smear_electron_au = 0.05;
  cfg.smear_ion_au = 0.3;
  return cfg;
}

const atl::model::PhysicsModel& physics() {
  static const auto p = atl::model::build_physics(bench_config());
  return p;
}

const atl::eventgen::EventFile& events() {
  static const auto file = atl::eventgen::run_simulation(
      atl::model::build_sim_config(bench_config(), physics()));
  return file;
}

void BM_simulate_serial(benchmark::State& state) {
  const auto sim = atl::model::build_sim_config(bench_config(), physics());
  for (auto _ : state)
    benchmark::DoNotOptimize(atl::eventgen::run_simulation_serial(sim));
}

void BM_simulate_parallel(benchmark::State& state) {
  const auto sim = atl::model::build_sim_config(bench_config(), physics());
  for (auto _ : state)
    benchmark::DoNotOptimize(atl::eventgen::run_simulation(sim));
}

void BM_fill_jes_serial(benchmark::State& state) {
  const auto binning = bench_config().binning();
  for (auto _ : state)
    benchmark::DoNotOptimize(atl::analysis::fill_jes_serial(events().events, binning));
}

void BM_fill_jes_parallel(benchmark::State& state) {
  const auto binning = bench_config().binning();
  for (auto _ : state)
    benchmark::DoNotOptimize(atl::analysis::fill_jes(events().events, binning));
}

void BM_model_map_serial(benchmark::State& state) {
  const auto cfg = bench_config();
  for (auto _ : state)
    benchmark::DoNotOptimize(atl::model::evaluate_model_map_serial(
        cfg, physics(), atl::pathways::BandParity::Odd));
}

void BM_model_map_parallel(benchmark::State& state) {
  const auto cfg = bench_config();
  for (auto _ : state)
    benchmark::DoNotOptimize(atl::model::evaluate_model_map(
        cfg, physics(), atl::pathways::BandParity::Odd));
}

}  // namespace

BENCHMARK(BM_simulate_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_simulate_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fill_jes_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fill_jes_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_model_map_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_model_map_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
