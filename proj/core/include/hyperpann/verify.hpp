#pragma once

// Numerical checks of the constitutive inequalities of incompressible
// isotropic hyperelasticity.
//
// Every check returns a VerificationReport; a failing verdict always carries
// at least one witness. Strict inequalities pass only for values > 0; values
// in (-1e-10, 0] fail with the `marginal` flag so round-off borderline cases
// stay visible.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperpann/energy_models.hpp"
#include "hyperpann/ffnn.hpp"

namespace hyperpann {

inline constexpr double kStrictMargin = 1e-10;
inline constexpr double kHessianStep = 1e-4;
inline constexpr double kDefaultLogRange = 1.5;
inline constexpr double kExtendedLogRange = 2.2;

struct Witness {
  std::vector<double> state;
  double value = 0.0;
  bool marginal = false;
  std::string note;
};

struct VerificationReport {
  std::string check;
  std::string model;
  nlohmann::json domain = nlohmann::json::object();
  bool passed = true;
  std::size_t evaluated = 0;
  std::vector<Witness> witnesses;
  std::map<std::string, double> tolerances;
  std::map<std::string, double> findings;

  /// Records a failing state and flips the verdict.
  void fail(Witness w);
  /// Tests value > 0 and records a witness otherwise.
  void require_positive(std::vector<double> state, double value, std::string note = {});
  /// Stable order by state so reports do not depend on evaluation order.
  void sort_witnesses();

  nlohmann::json to_json() const;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;
using Matrix3 = std::array<std::array<double, 3>, 3>;

struct ReducedHessian {
  double h1 = 0.0;
  double h2 = 0.0;
  Matrix2 matrix{};
  std::array<double, 2> eigenvalues{};  // ascending
};

/// Hessian of W_red(h1, h2) = W(e^h1, e^h2, e^(-h1-h2)) by central second
/// differences of the energy. Throws EvaluationError if the stencil meets a
/// non-finite energy.
ReducedHessian reduced_hessian(const EnergyModel& model, double h1, double h2,
                               double step = kHessianStep);

/// Hessian of the unconstrained energy in the three log-stretches, by
/// central differences of the analytic Kirchhoff stresses.
Matrix3 log_stretch_hessian(const EnergyModel& model, const Vec3& log_stretches,
                            double step = kHessianStep);

/// Second route to the reduced Hessian: projection of log_stretch_hessian onto
/// the traceless plane,
///   [[W11 - 2 W13 + W33, W12 - W13 - W23 + W33], [sym, W22 - 2 W23 + W33]].
ReducedHessian projected_hessian(const EnergyModel& model, double h1, double h2,
                                 double step = kHessianStep);

/// Frobenius norm of the difference relative to the larger operand.
double relative_discrepancy(const ReducedHessian& a, const ReducedHessian& b);

struct LogGrid {
  double lo = -kDefaultLogRange;
  double hi = kDefaultLogRange;
  std::size_t points = 21;
};

/// Weak-form Hill inequality: the reduced Hessian is positive-definite at
/// every node of the n x n grid.
VerificationReport hill_grid_check(const EnergyModel& model, const LogGrid& grid = {});

struct SampleOptions {
  double range = kDefaultLogRange;
  /// Constant pressures added to the two states' stresses after the
  /// deviatoric projection; the pairing must not depend on them.
  double pressure_first = 0.0;
  double pressure_second = 0.0;
};

/// True-stress-true-strain monotonicity on random incompressible diagonal pairs:
///   <tau(log V2) - tau(log V1), log V2 - log V1> > 0.
VerificationReport tsts_m_sample(const EnergyModel& model, std::size_t pairs, std::uint64_t seed,
                                 const SampleOptions& options = {});

/// (tau_a - tau_b)(log l_a - log l_b) > 0 for every pair of distinct stretches
/// at random incompressible states.
VerificationReport principal_stress_ordering(const EnergyModel& model, std::size_t samples,
                                             std::uint64_t seed, double range = kDefaultLogRange);

/// Simple-shear true stress on gamma in [0, gamma_max] with `points` nodes;
/// passes iff non-decreasing. When `closed_form` is given the generic route
/// is first compared with it (1e-9 relative) and any mismatch fails the check.
/// Findings: "peak_gamma" (refined argmax) and "peak_stress" when not monotone.
VerificationReport shear_monotonicity(const EnergyModel& model, double gamma_max,
                                      std::size_t points,
                                      const std::function<double(double)>& closed_form = {});

// ---- majorization machinery ------------------------------------------------

/// Singular values in decreasing order.
Vec3 singular_values(const Matrix3& f);

/// Ordered partial sums of `a` are bounded by those of `b` (both sorted
/// decreasingly first), up to `tolerance`.
bool weakly_submajorized(Vec3 a, Vec3 b, double tolerance = 0.0);

struct BirkhoffTerm {
  double weight = 0.0;
  std::array<int, 3> permutation{};  // row i has its one in column permutation[i]
};

/// Greedy decomposition of a doubly stochastic matrix into weighted
/// permutation matrices: repeatedly peels off the permutation whose smallest
/// entry in the residual is largest.
std::vector<BirkhoffTerm> birkhoff_decomposition(const Matrix3& doubly_stochastic,
                                                 double tolerance = 1e-14);
Matrix3 reconstruct(const std::vector<BirkhoffTerm>& terms);

Matrix3 random_doubly_stochastic(std::mt19937_64& rng);
Matrix3 random_rotation(std::mt19937_64& rng);

/// Permutation-symmetrized CMNN on stretch triples: 1/6 sum_P f(P l).
class SymmetricCmnn {
 public:
  explicit SymmetricCmnn(NetworkParams params);
  double operator()(const Vec3& l) const;

 private:
  Network net_;
};

/// (a) Ky Fan partial-sum convexity of ordered singular values,
/// (b) Birkhoff reconstruction to 1e-10 with at most 7 terms,
/// (c) f(l(tF1 + (1-t)F2)) <= f(t l(F1) + (1-t) l(F2)) + 1e-10 for a
///     random symmetric CMNN f.
VerificationReport majorization_suite(std::size_t trials, std::uint64_t seed);

}  // namespace hyperpann
