#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hyperpann/calibrate.hpp"
#include "hyperpann/dataset.hpp"
#include "hyperpann/pann.hpp"
#include "hyperpann/response.hpp"
#include "hyperpann/verify.hpp"

using namespace hyperpann;

namespace {

const Dataset& treloar() {
  static const Dataset data = load_dataset(HYPERPANN_DATA_DIR "/treloar.csv");
  return data;
}

ArchitectureTag tag_of(const benchmark::State& state) { return kAllArchitectures[state.range(0)]; }

}  // namespace

static void EnergyGradient(benchmark::State& state) {
  const auto arch = build_architecture(tag_of(state), 16, 0);
  const Vec3 s{1.7, 0.9, 1.0 / 1.53};
  for (auto _ : state) {
    benchmark::DoNotOptimize(arch.energy(s));
    benchmark::DoNotOptimize(arch.gradient(s));
  }
  state.SetLabel(std::string(to_string(tag_of(state))));
}
BENCHMARK(EnergyGradient)->DenseRange(0, 3);

static void LossAndGradient(benchmark::State& state) {
  const auto arch = build_architecture(tag_of(state), 16, 0);
  const StressLoss loss(tag_of(state), treloar());
  std::vector<double> grad(arch.params().parameter_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(loss.evaluate(arch.params(), {}, grad));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(loss.size()));
  state.SetLabel(std::string(to_string(tag_of(state))));
}
BENCHMARK(LossAndGradient)->DenseRange(0, 3);

static void AdamSteps(benchmark::State& state) {
  TrainConfig cfg;
  Trainer trainer(build_architecture(tag_of(state), 16, 0), treloar(), cfg, 0);
  for (auto _ : state) benchmark::DoNotOptimize(trainer.step());
  state.SetLabel(std::string(to_string(tag_of(state))));
}
BENCHMARK(AdamSteps)->DenseRange(0, 3);

static void HessianRoutes(benchmark::State& state) {
  const auto arch = build_architecture(tag_of(state), 16, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_hessian(arch, 0.3, -0.2));
    benchmark::DoNotOptimize(projected_hessian(arch, 0.3, -0.2));
  }
  state.SetLabel(std::string(to_string(tag_of(state))));
}
BENCHMARK(HessianRoutes)->DenseRange(0, 3);

static void HillGrid(benchmark::State& state) {
  const auto arch = build_architecture(ArchitectureTag::PANN_SQRT_I, 16, 0);
  const LogGrid grid{-1.5, 1.5, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(hill_grid_check(arch, grid).passed);
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(HillGrid)->RangeMultiplier(2)->Range(8, 64)->Complexity(benchmark::oN);

static void Extrapolation(benchmark::State& state) {
  const auto arch = build_architecture(ArchitectureTag::PANN_LAMBDA, 16, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extrapolation_report(arch, DeformationMode::UX, 100.0, 400).monotone);
  }
}
BENCHMARK(Extrapolation)->Unit(benchmark::kMillisecond);

static void Majorization(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(majorization_suite(100, 0).passed);
}
BENCHMARK(Majorization)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
