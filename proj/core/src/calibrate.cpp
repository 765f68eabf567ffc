#include "hyperpann/calibrate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include "hyperpann/errors.hpp"
#include "hyperpann/response.hpp"

namespace hyperpann {

double mse(const EnergyModel& model, const Dataset& data) {
  if (data.entries.empty()) throw DomainError("empty dataset");
  double sum = 0.0;
  for (std::size_t i = 0; i < data.entries.size(); ++i) {
    const auto& p = data.entries[i];
    const double s1 = nominal_stress(model, p.mode, p.lambda).s1;
    if (!std::isfinite(s1)) {
      std::ostringstream msg;
      msg << model.name() << " gives non-finite stress at entry " << i << " (" << to_string(p.mode)
          << ", lambda = " << p.lambda << ")";
      throw EvaluationError(msg.str());
    }
    const double r = s1 - p.s1;
    sum += r * r;
  }
  return sum / static_cast<double>(data.entries.size());
}

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw DomainError("learning rate must be positive");
  }
  if (restarts < 1) throw DomainError("at least one restart is required");
  if (nodes < 1) throw DomainError("at least one hidden node is required");
  if (!(beta1 >= 0.0 && beta1 < 1.0 && beta2 >= 0.0 && beta2 < 1.0 && epsilon > 0.0)) {
    throw DomainError("invalid Adam hyperparameters");
  }
  if (trace_interval < 1) throw DomainError("trace interval must be positive");
}

StressLoss::StressLoss(ArchitectureTag tag, const Dataset& data) : tag_(tag) {
  features_.reserve(data.size());
  targets_.reserve(data.size());
  for (const auto& p : data.entries) {
    const PrincipalStretches s = stretches_for_mode(p.mode, p.lambda);
    features_.push_back(nominal_stress_features(tag, s.values()));
    targets_.push_back(p.s1);
  }
}

double StressLoss::evaluate(const NetworkParams& params, std::span<const std::size_t> indices,
                            std::span<double> gradient) const {
  const Network net = params.materialize();
  const std::size_t n = net.nodes;
  const std::size_t m = net.inputs;
  if (m != input_dimension(tag_)) throw ContractViolation("network does not match the loss");
  const bool want_grad = !gradient.empty();
  if (want_grad && gradient.size() != params.parameter_count()) {
    throw ContractViolation("gradient buffer has wrong size");
  }
  const std::size_t count = indices.empty() ? targets_.size() : indices.size();
  const double scale = 2.0 / static_cast<double>(count);

  std::vector<double> local(want_grad ? params.parameter_count() : 0);
  double* g_hidden = local.data();
  double* g_output = g_hidden + n * m;
  double* g_bias = g_output + n;
  if (want_grad) std::fill(gradient.begin(), gradient.end(), 0.0);

  double sum = 0.0;
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t i = indices.empty() ? c : indices[c];
    const StressFeatures& f = features_[i];
    if (want_grad) std::fill(local.begin(), local.end(), 0.0);
    double s1 = 0.0;
    for (std::size_t p = 0; p < f.pairs; ++p) {
      const double* x = &f.x[p * m];
      const double* d = &f.direction[p * m];
      for (std::size_t k = 0; k < n; ++k) {
        const double* row = &net.hidden[k * m];
        double z = net.bias[k];
        double u = 0.0;
        for (std::size_t l = 0; l < m; ++l) {
          z += row[l] * x[l];
          u += row[l] * d[l];
        }
        const double s = 1.0 / (1.0 + std::exp(-z));
        const double wk = net.output[k];
        s1 += wk * s * u;
        if (want_grad) {
          const double slope = s * (1.0 - s);
          const double a = wk * slope * u;
          const double b = wk * s;
          g_output[k] += s * u;
          g_bias[k] += a;
          double* gw = g_hidden + k * m;
          for (std::size_t l = 0; l < m; ++l) gw[l] += a * x[l] + b * d[l];
        }
      }
    }
    s1 *= f.weight;
    const double r = s1 - targets_[i];
    sum += r * r;
    if (want_grad) {
      const double factor = scale * r * f.weight;
      for (std::size_t j = 0; j < local.size(); ++j) gradient[j] += factor * local[j];
    }
  }
  if (want_grad) params.pull_back(gradient);
  return sum / static_cast<double>(count);
}

Trainer::Trainer(PannArchitecture arch, const Dataset& data, TrainConfig cfg, std::uint64_t batch_seed)
    : tag_(arch.tag()), params_(arch.params()), loss_(tag_, data), cfg_(cfg), rng_(batch_seed) {
  cfg_.validate();
  const std::size_t count = params_.parameter_count();
  m_.assign(count, 0.0);
  v_.assign(count, 0.0);
  grad_.assign(count, 0.0);
  if (cfg_.batch_size > 0 && cfg_.batch_size < loss_.size()) batch_.resize(loss_.size());
}

double Trainer::step() {
  std::span<const std::size_t> indices;
  if (!batch_.empty()) {
    // partial Fisher-Yates from the identity, so the generator alone fixes the sample
    std::iota(batch_.begin(), batch_.end(), std::size_t{0});
    for (std::size_t i = 0; i < cfg_.batch_size; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, batch_.size() - 1);
      std::swap(batch_[i], batch_[pick(rng_)]);
    }
    indices = std::span<const std::size_t>(batch_.data(), cfg_.batch_size);
  }
  const double value = loss_.evaluate(params_, indices, grad_);
  if (!std::isfinite(value)) return value;

  ++step_;
  const double t = static_cast<double>(step_);
  const double correction1 = 1.0 - std::pow(cfg_.beta1, t);
  const double correction2 = 1.0 - std::pow(cfg_.beta2, t);
  auto raw = params_.raw();
  for (std::size_t j = 0; j < raw.size(); ++j) {
    m_[j] = cfg_.beta1 * m_[j] + (1.0 - cfg_.beta1) * grad_[j];
    v_[j] = cfg_.beta2 * v_[j] + (1.0 - cfg_.beta2) * grad_[j] * grad_[j];
    const double m_hat = m_[j] / correction1;
    const double v_hat = v_[j] / correction2;
    raw[j] -= cfg_.learning_rate * m_hat / (std::sqrt(v_hat) + cfg_.epsilon);
  }
  return value;
}

void Trainer::run(std::size_t count, std::vector<TraceSample>* trace) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t before = step_;
    const double value = step();
    if (!std::isfinite(value)) {
      throw EvaluationError("non-finite loss at step " + std::to_string(before));
    }
    if (trace != nullptr && before % cfg_.trace_interval == 0) {
      trace->push_back({static_cast<std::size_t>(before), batch_.empty() ? value : loss()});
    }
  }
}

double Trainer::loss() const { return loss_.evaluate(params_, {}, {}); }

OptimizerState Trainer::state() const {
  OptimizerState s;
  s.step = step_;
  s.first_moment = m_;
  s.second_moment = v_;
  std::ostringstream rng;
  rng << rng_;
  s.rng_state = rng.str();
  return s;
}

void Trainer::restore(const OptimizerState& s) {
  if (s.first_moment.size() != m_.size() || s.second_moment.size() != v_.size()) {
    throw ContractViolation("optimizer state does not match the network size");
  }
  step_ = s.step;
  m_ = s.first_moment;
  v_ = s.second_moment;
  if (!s.rng_state.empty()) {
    std::istringstream rng(s.rng_state);
    rng >> rng_;
    if (!rng) throw ContractViolation("corrupted generator state");
  }
}

std::size_t worker_count() {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERPANN_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) workers = std::min(workers, static_cast<std::size_t>(cap));
  }
  return workers;
}

FitResult fit(ArchitectureTag tag, const Dataset& data, const TrainConfig& cfg, std::size_t workers) {
  cfg.validate();
  FitResult result;
  result.tag = tag;
  result.dataset = data.name;
  result.config = cfg;
  result.restarts.resize(cfg.restarts);
  std::vector<std::optional<PannArchitecture>> trained(cfg.restarts);

  auto run_restart = [&](std::size_t r) {
    RestartResult& out = result.restarts[r];
    out.seed = cfg.seed + r;
    try {
      Trainer trainer(build_architecture(tag, cfg.nodes, out.seed), data, cfg, out.seed);
      trainer.run(cfg.steps, &out.trace);
      out.final_mse = trainer.loss();
      if (!std::isfinite(out.final_mse)) throw EvaluationError("non-finite final loss");
      out.trace.push_back({cfg.steps, out.final_mse});
      trained[r] = trainer.architecture();
    } catch (const std::exception& e) {
      out.failed = true;
      out.message = e.what();
    }
  };

  if (workers == 0) workers = worker_count();
  workers = std::min(workers, cfg.restarts);
  if (workers <= 1) {
    for (std::size_t r = 0; r < cfg.restarts; ++r) run_restart(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < cfg.restarts; r = next++) run_restart(r);
      });
    }
    for (auto& t : pool) t.join();
  }

  bool any = false;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    if (result.restarts[r].failed) continue;
    if (!any || result.restarts[r].final_mse < result.best_mse) {
      result.best_mse = result.restarts[r].final_mse;
      result.best_restart = r;
      any = true;
    }
  }
  if (!any) throw EvaluationError("every restart failed: " + result.restarts.front().message);
  result.best = trained[result.best_restart];
  result.log10_best_mse = std::log10(result.best_mse);
  return result;
}

}  // namespace hyperpann
