#pragma once

#include <span>
#include <vector>

#include "hyperpann/energy_models.hpp"
#include "hyperpann/kinematics.hpp"
#include "hyperpann/pann.hpp"

namespace hyperpann {

/// Normal stress along e1 on a canonical load path.
struct StressPoint {
  double lambda = 1.0;
  double s1 = 0.0;      // first Piola-Kirchhoff, MPa
  double cauchy = 0.0;  // s1 * lambda, MPa
  DeformationMode mode = DeformationMode::UX;
};

/// S1 = dW/dl1 - (l3/l1) dW/dl3 with the Lagrange multiplier eliminated
/// through the stress-free e3 direction.
StressPoint nominal_stress(const EnergyModel& model, DeformationMode mode, double lambda);

/// Principal Kirchhoff stresses tau_k = l_k dW/dl_k (the log-stretch
/// gradient of the energy), without pressure.
Vec3 kirchhoff_stresses(const EnergyModel& model, const Vec3& stretches);

/// True shear stress in simple shear F = 1 + gamma e1 (x) e2:
/// sigma12 = (tau1 - tau2) / sqrt(4 + gamma^2).
double shear_stress(const EnergyModel& model, double gamma);

struct CoefficientTrace {
  std::vector<double> lambda;
  std::vector<double> c1, c2;  // MPa
  std::vector<double> d1, d2;  // dimensionless
  std::vector<double> cauchy;  // MPa
};

/// UX stress-coefficient decomposition sigma = c1 d1 + c2 d2 with
/// d_l = l1 dI_l/dl1 - l3 dI_l/dl3. Invariant architectures only.
CoefficientTrace coefficient_trace(const PannArchitecture& arch, std::span<const double> lambdas);

/// Geometric grid from `lo` to `hi` (inclusive) with `per_decade` intervals per decade.
std::vector<double> geometric_grid(double lo, double hi, int per_decade);

struct ExtrapolationRow {
  double lambda = 1.0;
  double s1 = 0.0;
  double cauchy = 0.0;
  double dsigma = 0.0;   // d sigma / d lambda, NaN at the grid ends
  double d2sigma = 0.0;  // d^2 sigma / d lambda^2, NaN at the grid ends
};

struct ExtrapolationReport {
  DeformationMode mode = DeformationMode::UX;
  std::vector<ExtrapolationRow> rows;
  bool monotone = true;
  double largest_drop = 0.0;  // max(sigma_i - sigma_{i+1}, 0) over adjacent points
  /// Stretches at which the numerical curvature changes sign (midpoints of
  /// the bracketing grid points).
  std::vector<double> curvature_sign_changes;
};

/// Default drop tolerance for the monotonicity verdict, MPa.
inline constexpr double kMonotonicityDropTolerance = 1e-8;

/// Cauchy stress on a geometric grid over [1, lambda_max], with central
/// difference first and second derivatives. Monotone iff no drop between
/// adjacent points exceeds `drop_tolerance`.
ExtrapolationReport extrapolation_report(const EnergyModel& model, DeformationMode mode,
                                         double lambda_max, int per_decade = 400,
                                         double drop_tolerance = kMonotonicityDropTolerance);

}  // namespace hyperpann
