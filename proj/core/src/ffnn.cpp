#include "hyperpann/ffnn.hpp"

#include <cmath>
#include <random>

#include "hyperpann/errors.hpp"

namespace hyperpann {

std::string_view to_string(ConstraintMode mode) {
  return mode == ConstraintMode::ICNN ? "ICNN" : "CMNN";
}

std::optional<ConstraintMode> parse_constraint_mode(std::string_view tag) {
  if (tag == "ICNN") return ConstraintMode::ICNN;
  if (tag == "CMNN") return ConstraintMode::CMNN;
  return std::nullopt;
}

double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double inverse_softplus(double y) {
  if (!(y > 0.0)) throw DomainError("inverse softplus requires a positive argument");
  // log(e^y - 1) = y + log(1 - e^-y)
  return y + std::log(-std::expm1(-y));
}

NetworkParams::NetworkParams(std::size_t nodes, std::size_t inputs, ConstraintMode mode)
    : NetworkParams(nodes, inputs, mode, std::vector<double>(nodes * inputs + 2 * nodes, 0.0)) {}

NetworkParams::NetworkParams(std::size_t nodes, std::size_t inputs, ConstraintMode mode,
                             std::vector<double> raw)
    : nodes_(nodes), inputs_(inputs), mode_(mode), raw_(std::move(raw)) {
  if (nodes == 0 || inputs == 0) throw ContractViolation("network needs n >= 1 and m >= 1");
  if (raw_.size() != nodes * inputs + 2 * nodes) {
    throw ContractViolation("raw parameter vector has " + std::to_string(raw_.size()) +
                            " entries, expected " + std::to_string(nodes * inputs + 2 * nodes));
  }
}

bool NetworkParams::is_constrained(std::size_t index) const {
  const std::size_t hidden_end = nodes_ * inputs_;
  if (index < hidden_end) return mode_ == ConstraintMode::CMNN;
  return index < hidden_end + nodes_;
}

Network NetworkParams::materialize() const {
  Network net;
  net.nodes = nodes_;
  net.inputs = inputs_;
  const std::size_t hidden_end = nodes_ * inputs_;
  net.hidden.resize(hidden_end);
  net.output.resize(nodes_);
  net.bias.resize(nodes_);
  for (std::size_t i = 0; i < hidden_end; ++i) {
    net.hidden[i] = mode_ == ConstraintMode::CMNN ? softplus(raw_[i]) : raw_[i];
  }
  for (std::size_t k = 0; k < nodes_; ++k) {
    net.output[k] = softplus(raw_[hidden_end + k]);
    net.bias[k] = raw_[hidden_end + nodes_ + k];
  }
  return net;
}

void NetworkParams::set_entry(std::size_t index, double value) {
  raw_[index] = is_constrained(index) ? inverse_softplus(value) : value;
}

void NetworkParams::set_hidden_weight(std::size_t k, std::size_t l, double value) {
  set_entry(hidden_index(k, l), value);
}

void NetworkParams::set_output_weight(std::size_t k, double value) {
  set_entry(output_index(k), value);
}

void NetworkParams::set_bias(std::size_t k, double value) { set_entry(bias_index(k), value); }

void NetworkParams::pull_back(std::span<double> g) const {
  if (g.size() != raw_.size()) throw ContractViolation("gradient size mismatch");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (is_constrained(i)) g[i] *= sigmoid(raw_[i]);
  }
}

double evaluate(const Network& net, std::span<const double> x, std::span<double> input_gradient) {
  const std::size_t m = net.inputs;
  if (x.size() != m) throw ContractViolation("input has wrong dimension");
  const bool want_grad = !input_gradient.empty();
  if (want_grad) {
    if (input_gradient.size() != m) throw ContractViolation("gradient buffer has wrong dimension");
    for (auto& g : input_gradient) g = 0.0;
  }
  double value = 0.0;
  for (std::size_t k = 0; k < net.nodes; ++k) {
    const double* row = &net.hidden[k * m];
    double z = net.bias[k];
    for (std::size_t l = 0; l < m; ++l) z += row[l] * x[l];
    value += net.output[k] * softplus(z);
    if (want_grad) {
      const double s = net.output[k] * sigmoid(z);
      for (std::size_t l = 0; l < m; ++l) input_gradient[l] += s * row[l];
    }
  }
  return value;
}

ForwardResult forward(const NetworkParams& params, std::span<const double> x) {
  if (x.size() != params.inputs()) {
    throw ContractViolation("input has " + std::to_string(x.size()) + " entries, network expects " +
                            std::to_string(params.inputs()));
  }
  const Network net = params.materialize();
  const std::size_t n = net.nodes;
  const std::size_t m = net.inputs;

  ForwardResult out;
  out.input_gradient.assign(m, 0.0);
  out.parameter_gradient.assign(params.parameter_count(), 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double z = net.bias[k];
    for (std::size_t l = 0; l < m; ++l) z += net.hidden_weight(k, l) * x[l];
    const double act = softplus(z);
    const double slope = sigmoid(z);
    out.value += net.output[k] * act;
    for (std::size_t l = 0; l < m; ++l) {
      out.input_gradient[l] += net.output[k] * slope * net.hidden_weight(k, l);
      out.parameter_gradient[params.hidden_index(k, l)] = net.output[k] * slope * x[l];
    }
    out.parameter_gradient[params.output_index(k)] = act;
    out.parameter_gradient[params.bias_index(k)] = net.output[k] * slope;
  }
  params.pull_back(out.parameter_gradient);
  return out;
}

NetworkParams init_network(std::size_t nodes, std::size_t inputs, ConstraintMode mode,
                           std::uint64_t seed) {
  NetworkParams params(nodes, inputs, mode);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0 / std::sqrt(static_cast<double>(inputs)));
  for (auto& r : params.raw()) r = dist(rng);
  return params;
}

}  // namespace hyperpann
