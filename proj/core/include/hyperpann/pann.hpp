#pragma once

// Polyconvex neural strain-energy functions built on the softplus network.
//
//   PANN_I       f(I1, I2)                               CMNN, m = 2
//   PANN_SQRT_I  f(K1, K2),  K = sqrt(I)                 CMNN, m = 2
//   PANN_LAMBDA  1/6  sum_P     f(P x),  x = (l, cof l)  CMNN, m = 6
//   PANN_NU      1/24 sum_Psgn  f(Psgn x)                ICNN, m = 6
//
// For det F = 1 the signed singular values coincide with the stretches, so
// PANN_NU uses the same stacked input as PANN_LAMBDA; the two differ in the
// symmetry group and the sign constraints.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hyperpann/energy_models.hpp"
#include "hyperpann/ffnn.hpp"

namespace hyperpann {

enum class ArchitectureTag { PANN_I, PANN_SQRT_I, PANN_LAMBDA, PANN_NU };

inline constexpr std::array<ArchitectureTag, 4> kAllArchitectures{
    ArchitectureTag::PANN_I, ArchitectureTag::PANN_SQRT_I, ArchitectureTag::PANN_LAMBDA,
    ArchitectureTag::PANN_NU};

/// CLI spelling: pann-i, pann-sqrt-i, pann-lambda, pann-nu.
std::string_view to_string(ArchitectureTag tag);
std::optional<ArchitectureTag> parse_architecture(std::string_view tag);

std::size_t input_dimension(ArchitectureTag tag);
ConstraintMode constraint_mode(ArchitectureTag tag);
bool is_invariant_based(ArchitectureTag tag);

using Matrix6 = std::array<std::array<int, 6>, 6>;

/// y_i = sign_i * x[source_i] on the stacked input (l1, l2, l3, a1, a2, a3).
struct SignedPermutation {
  std::array<int, 6> source{};
  std::array<int, 6> sign{};

  Matrix6 matrix() const;
};

struct PermutationSet {
  std::vector<SignedPermutation> elements;

  std::size_t size() const { return elements.size(); }
  std::vector<Matrix6> matrices() const;
};

/// The 6 permutations of the stretch triple with the cofactor triple co-permuted.
const PermutationSet& plain_permutations();
/// 6 permutations x 4 even sign patterns {id, flip(1,2), flip(1,3), flip(2,3)},
/// applied jointly to both triples.
const PermutationSet& signed_permutations();

/// (l1, l2, l3, l2 l3, l3 l1, l1 l2).
std::array<double, 6> stacked_input(const Vec3& stretches);

/// Network input for one state and its Jacobian with respect to the stretches.
struct NetworkInput {
  std::vector<double> x;         // m
  std::vector<double> jacobian;  // m x 3, row-major: d x_i / d l_k
};

NetworkInput network_input(ArchitectureTag tag, const Vec3& stretches);

/// The pieces of the nominal stress S1 = dW/dl1 - (l3/l1) dW/dl3 that do not
/// depend on the network: S1 = weight * sum_p <grad f(x_p), d_p>.
/// Used to precompute a calibration dataset once.
struct StressFeatures {
  std::size_t inputs = 0;
  std::size_t pairs = 0;
  double weight = 1.0;
  std::vector<double> x;          // pairs x inputs
  std::vector<double> direction;  // pairs x inputs
};

StressFeatures nominal_stress_features(ArchitectureTag tag, const Vec3& stretches);

class PannArchitecture final : public EnergyModel {
 public:
  /// Throws ContractViolation if the parameter shape or mode does not fit the tag.
  PannArchitecture(ArchitectureTag tag, NetworkParams params);

  ArchitectureTag tag() const { return tag_; }
  const NetworkParams& params() const { return params_; }
  const Network& network() const { return net_; }
  double energy_offset() const { return offset_; }

  /// Replaces the raw parameters and recomputes the offset.
  void set_raw(std::span<const double> raw);

  /// Network energy before the offset is subtracted.
  double raw_energy(const Vec3& stretches) const;

  double energy(const Vec3& stretches) const override;
  Vec3 gradient(const Vec3& stretches) const override;
  std::string name() const override;
  using EnergyModel::energy;
  using EnergyModel::gradient;

  /// (c1, c2) = df/dI for the invariant architectures; ContractViolation otherwise.
  std::array<double, 2> stress_coefficients(const Vec3& stretches) const;

 private:
  void refresh();

  ArchitectureTag tag_;
  NetworkParams params_;
  Network net_;
  double offset_ = 0.0;
};

/// Fresh architecture with n hidden nodes, parameters from init_network.
PannArchitecture build_architecture(ArchitectureTag tag, std::size_t nodes, std::uint64_t seed);

}  // namespace hyperpann
