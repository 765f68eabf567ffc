#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hyperpann/dataset.hpp"
#include "hyperpann/energy_models.hpp"
#include "hyperpann/pann.hpp"

namespace hyperpann {

/// Mean squared error of the nominal stress over the dataset, MPa^2.
/// Throws EvaluationError naming the first entry with a non-finite prediction.
double mse(const EnergyModel& model, const Dataset& data);

struct TrainConfig {
  double learning_rate = 0.002;
  std::size_t steps = 150000;
  std::size_t batch_size = 0;  // 0 = full batch
  std::size_t restarts = 5;
  std::size_t nodes = 16;
  std::uint64_t seed = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::size_t trace_interval = 1000;

  /// Throws DomainError on an invalid combination.
  void validate() const;
};

/// Adam moments, step counter and minibatch generator state; everything
/// needed to resume training bit-identically.
struct OptimizerState {
  std::uint64_t step = 0;
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  std::string rng_state;
};

/// Nominal-stress loss with precomputed network inputs for every data point.
class StressLoss {
 public:
  StressLoss(ArchitectureTag tag, const Dataset& data);

  std::size_t size() const { return targets_.size(); }

  /// MSE over `indices` (all points when empty). When `gradient` is
  /// non-empty it receives dMSE/draw.
  double evaluate(const NetworkParams& params, std::span<const std::size_t> indices,
                  std::span<double> gradient) const;

 private:
  ArchitectureTag tag_;
  std::vector<StressFeatures> features_;
  std::vector<double> targets_;
};

struct TraceSample {
  std::size_t step = 0;
  double loss = 0.0;
};

class Trainer {
 public:
  Trainer(PannArchitecture arch, const Dataset& data, TrainConfig cfg, std::uint64_t batch_seed);

  /// One Adam step. Returns the loss of the batch used, evaluated before the update.
  double step();

  /// Runs `count` steps, sampling the full-data loss every trace_interval
  /// steps. Throws EvaluationError on a non-finite loss.
  void run(std::size_t count, std::vector<TraceSample>* trace = nullptr);

  /// Full-dataset MSE at the current parameters.
  double loss() const;

  /// Snapshot of the current parameters as an energy model.
  PannArchitecture architecture() const { return PannArchitecture(tag_, params_); }
  const NetworkParams& params() const { return params_; }
  OptimizerState state() const;
  void restore(const OptimizerState& state);

 private:
  ArchitectureTag tag_;
  NetworkParams params_;
  StressLoss loss_;
  TrainConfig cfg_;
  std::vector<double> m_, v_, grad_;
  std::vector<std::size_t> batch_;
  std::uint64_t step_ = 0;
  std::mt19937_64 rng_;
};

struct RestartResult {
  std::uint64_t seed = 0;
  bool failed = false;
  std::string message;
  double final_mse = 0.0;
  std::vector<TraceSample> trace;
};

struct FitResult {
  ArchitectureTag tag = ArchitectureTag::PANN_I;
  std::string dataset;
  TrainConfig config;
  std::vector<RestartResult> restarts;
  std::optional<PannArchitecture> best;
  std::size_t best_restart = 0;
  double best_mse = 0.0;
  double log10_best_mse = 0.0;
};

/// Number of worker threads: hardware concurrency, capped by HYPERPANN_THREADS.
std::size_t worker_count();

/// Calibrates `restarts` independently initialized networks (seeds seed,
/// seed+1, ...) and keeps the one with the lowest final MSE. Deterministic
/// in (tag, data, cfg) regardless of the worker count. Throws
/// EvaluationError if every restart fails.
FitResult fit(ArchitectureTag tag, const Dataset& data, const TrainConfig& cfg,
              std::size_t workers = 0);

}  // namespace hyperpann
