#pragma once

// Single-hidden-layer softplus network
//
//   f(x) = sum_k w_k softplus(sum_l W_kl x_l + b_k)
//
// with sign constraints: ICNN keeps w >= 0 (convex in x), CMNN keeps
// w >= 0 and W >= 0 (convex and non-decreasing in x). Constrained entries
// are stored as unconstrained raw reals r and materialized as softplus(r),
// so any raw vector is a valid network.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hyperpann {

enum class ConstraintMode { ICNN, CMNN };

std::string_view to_string(ConstraintMode mode);
std::optional<ConstraintMode> parse_constraint_mode(std::string_view tag);

/// Numerically stable log(1 + e^x).
double softplus(double x);
/// e^x / (1 + e^x), the derivative of softplus.
double sigmoid(double x);
/// Inverse of softplus on (0, inf).
double inverse_softplus(double y);

/// Effective (materialized) weights, row-major hidden matrix.
struct Network {
  std::size_t nodes = 0;
  std::size_t inputs = 0;
  std::vector<double> hidden;  // nodes x inputs
  std::vector<double> output;  // nodes
  std::vector<double> bias;    // nodes

  double hidden_weight(std::size_t k, std::size_t l) const { return hidden[k * inputs + l]; }
};

/// Trainable parameters. Raw layout: hidden (n*m, row-major), output (n), bias (n).
class NetworkParams {
 public:
  NetworkParams(std::size_t nodes, std::size_t inputs, ConstraintMode mode);
  NetworkParams(std::size_t nodes, std::size_t inputs, ConstraintMode mode, std::vector<double> raw);

  std::size_t nodes() const { return nodes_; }
  std::size_t inputs() const { return inputs_; }
  ConstraintMode mode() const { return mode_; }
  std::size_t parameter_count() const { return raw_.size(); }

  std::span<const double> raw() const { return raw_; }
  std::span<double> raw() { return raw_; }

  std::size_t hidden_index(std::size_t k, std::size_t l) const { return k * inputs_ + l; }
  std::size_t output_index(std::size_t k) const { return nodes_ * inputs_ + k; }
  std::size_t bias_index(std::size_t k) const { return nodes_ * inputs_ + nodes_ + k; }

  /// Whether the raw entry at `index` passes through softplus.
  bool is_constrained(std::size_t index) const;

  Network materialize() const;

  /// Sets an effective weight, inverting the reparametrization when needed.
  /// Throws DomainError for a non-positive value on a constrained entry.
  void set_hidden_weight(std::size_t k, std::size_t l, double value);
  void set_output_weight(std::size_t k, double value);
  void set_bias(std::size_t k, double value);

  /// Chain rule through the reparametrization: converts a gradient with
  /// respect to effective weights (same layout) into one with respect to raw.
  void pull_back(std::span<double> effective_gradient) const;

 private:
  void set_entry(std::size_t index, double value);

  std::size_t nodes_;
  std::size_t inputs_;
  ConstraintMode mode_;
  std::vector<double> raw_;
};

struct ForwardResult {
  double value = 0.0;
  std::vector<double> input_gradient;
  std::vector<double> parameter_gradient;  // with respect to raw parameters
};

/// Evaluates f, df/dx and df/draw. Throws ContractViolation on a dimension mismatch.
ForwardResult forward(const NetworkParams& params, std::span<const double> x);

/// Value and input gradient only, on already-materialized weights.
/// `input_gradient` must have `net.inputs` entries; pass an empty span to skip it.
double evaluate(const Network& net, std::span<const double> x, std::span<double> input_gradient);

/// Raw parameters drawn i.i.d. from N(0, 1/m), deterministic in `seed`.
NetworkParams init_network(std::size_t nodes, std::size_t inputs, ConstraintMode mode,
                           std::uint64_t seed);

}  // namespace hyperpann
