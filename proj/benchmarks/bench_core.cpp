#include <benchmark/benchmark.h>

#include "dcs/bilinear.hpp"
#include "dcs/design.hpp"
#include "dcs/discretize.hpp"
#include "dcs/frequency_response.hpp"
#include "dcs/io.hpp"
#include "dcs/step_response.hpp"

using namespace dcs;

namespace {

TransferFunction plant_z() {
  return zoh_discretize(ProjectConfig{}.plant_s(), 0.1);
}

void BM_ZohDiscretize(benchmark::State& state) {
  const auto gs = ProjectConfig{}.plant_s();
  for (auto _ : state) benchmark::DoNotOptimize(zoh_discretize(gs, 0.1));
}
BENCHMARK(BM_ZohDiscretize);

void BM_BilinearRoundTrip(benchmark::State& state) {
  const auto gz = plant_z();
  for (auto _ : state)
    benchmark::DoNotOptimize(bilinear_w_to_z(bilinear_z_to_w(gz)));
}
BENCHMARK(BM_BilinearRoundTrip);

void BM_BodeSweep400(benchmark::State& state) {
  const auto gz = plant_z();
  for (auto _ : state)
    benchmark::DoNotOptimize(bode_sweep(gz, 0.01, 30.0, 400));
}
BENCHMARK(BM_BodeSweep400);

void BM_Margins(benchmark::State& state) {
  const auto gw = bilinear_z_to_w(plant_z());
  const auto loop =
      series(design_lag(gw, {40.0, 3.29, 0.1}, 10.0).d_z, plant_z());
  for (auto _ : state) benchmark::DoNotOptimize(margins(loop));
}
BENCHMARK(BM_Margins);

void BM_DesignLag(benchmark::State& state) {
  const auto gw = bilinear_z_to_w(plant_z());
  for (auto _ : state)
    benchmark::DoNotOptimize(design_lag(gw, {40.0, 3.29, 0.1}, 10.0));
}
BENCHMARK(BM_DesignLag);

void BM_DesignLead(benchmark::State& state) {
  const auto gw = bilinear_z_to_w(plant_z());
  for (auto _ : state)
    benchmark::DoNotOptimize(design_lead(gw, {40.0, 2.5, 0.1}, 10.0));
}
BENCHMARK(BM_DesignLead);

void BM_DesignPi(benchmark::State& state) {
  const auto gw = bilinear_z_to_w(plant_z());
  for (auto _ : state)
    benchmark::DoNotOptimize(design_pi(gw, {40.0, 0.8, 0.1}));
}
BENCHMARK(BM_DesignPi);

void BM_DesignPid(benchmark::State& state) {
  const auto gw = bilinear_z_to_w(plant_z());
  for (auto _ : state)
    benchmark::DoNotOptimize(design_pid(gw, {40.0, 1.95, 0.1}, 0.85));
}
BENCHMARK(BM_DesignPid);

void BM_SimulateStep150s(benchmark::State& state) {
  const ProjectConfig cfg;
  const auto gz = plant_z();
  const auto d = design_lag(bilinear_z_to_w(gz), {40.0, 3.29, 0.1}, 10.0);
  const TransferFunction sensed(gz.num() * cfg.kpot, gz.den(), gz.domain());
  const LoopConfig loop{d.d_z, sensed, cfg.step_amplitude, 150.0};
  for (auto _ : state) benchmark::DoNotOptimize(simulate_step(loop));
}
BENCHMARK(BM_SimulateStep150s);

}  // namespace

BENCHMARK_MAIN();
