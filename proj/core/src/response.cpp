#include "hyperpann/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperpann/errors.hpp"

namespace hyperpann {

StressPoint nominal_stress(const EnergyModel& model, DeformationMode mode, double lambda) {
  const PrincipalStretches s = stretches_for_mode(mode, lambda);
  const Vec3 g = model.gradient(s);
  StressPoint p;
  p.lambda = lambda;
  p.mode = mode;
  p.s1 = g[0] - (s[2] / s[0]) * g[2];
  p.cauchy = p.s1 * lambda;
  return p;
}

Vec3 kirchhoff_stresses(const EnergyModel& model, const Vec3& s) {
  const Vec3 g = model.gradient(s);
  return {s[0] * g[0], s[1] * g[1], s[2] * g[2]};
}

double shear_stress(const EnergyModel& model, double gamma) {
  const PrincipalStretches s = simple_shear_stretches(gamma);
  const Vec3 tau = kirchhoff_stresses(model, s.values());
  return (tau[0] - tau[1]) / std::sqrt(4.0 + gamma * gamma);
}

CoefficientTrace coefficient_trace(const PannArchitecture& arch, std::span<const double> lambdas) {
  if (!is_invariant_based(arch.tag())) {
    throw ContractViolation("coefficient trace is defined only for pann-i and pann-sqrt-i");
  }
  CoefficientTrace trace;
  for (double lambda : lambdas) {
    const PrincipalStretches s = stretches_for_mode(DeformationMode::UX, lambda);
    const NetworkInput in = network_input(arch.tag(), s.values());
    const auto c = arch.stress_coefficients(s.values());
    // jacobian rows: invariant l, columns: stretch k
    const double d1 = s[0] * in.jacobian[0] - s[2] * in.jacobian[2];
    const double d2 = s[0] * in.jacobian[3] - s[2] * in.jacobian[5];
    trace.lambda.push_back(lambda);
    trace.c1.push_back(c[0]);
    trace.c2.push_back(c[1]);
    trace.d1.push_back(d1);
    trace.d2.push_back(d2);
    trace.cauchy.push_back(nominal_stress(arch, DeformationMode::UX, lambda).cauchy);
  }
  return trace;
}

std::vector<double> geometric_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || per_decade < 1) {
    throw DomainError("geometric grid needs 0 < lo < hi and at least one point per decade");
  }
  const double decades = std::log10(hi / lo);
  const auto intervals = static_cast<std::size_t>(std::ceil(decades * per_decade - 1e-9));
  std::vector<double> grid(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    grid[i] = lo * std::pow(10.0, decades * static_cast<double>(i) / static_cast<double>(intervals));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

ExtrapolationReport extrapolation_report(const EnergyModel& model, DeformationMode mode,
                                         double lambda_max, int per_decade, double drop_tolerance) {
  if (!(lambda_max > 1.0)) throw DomainError("lambda_max must exceed 1");
  const std::vector<double> grid = geometric_grid(1.0, lambda_max, per_decade);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  ExtrapolationReport report;
  report.mode = mode;
  report.rows.reserve(grid.size());
  for (double lambda : grid) {
    const StressPoint p = nominal_stress(model, mode, lambda);
    report.rows.push_back({lambda, p.s1, p.cauchy, nan, nan});
  }

  auto& rows = report.rows;
  // Second differences below this multiple of the round-off level carry no sign.
  constexpr double kNoiseFactor = 64.0 * std::numeric_limits<double>::epsilon();
  std::vector<int> curvature_sign(rows.size(), 0);
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    const double hm = rows[i].lambda - rows[i - 1].lambda;
    const double hp = rows[i + 1].lambda - rows[i].lambda;
    const double fm = rows[i - 1].cauchy;
    const double f0 = rows[i].cauchy;
    const double fp = rows[i + 1].cauchy;
    const double denom = hm * hp * (hm + hp);
    rows[i].dsigma = (hm * hm * fp - hp * hp * fm + (hp * hp - hm * hm) * f0) / denom;
    rows[i].d2sigma = 2.0 * (hm * fp - (hm + hp) * f0 + hp * fm) / denom;
    const double scale = std::max({std::abs(fm), std::abs(f0), std::abs(fp)});
    const double noise = kNoiseFactor * scale * 2.0 * (hm + hp) / denom;
    if (std::abs(rows[i].d2sigma) > noise) curvature_sign[i] = rows[i].d2sigma > 0.0 ? 1 : -1;
  }

  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    report.largest_drop = std::max(report.largest_drop, rows[i].cauchy - rows[i + 1].cauchy);
  }
  report.monotone = report.largest_drop <= drop_tolerance;

  std::size_t last = 0;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    if (curvature_sign[i] == 0) continue;
    if (last != 0 && curvature_sign[i] != curvature_sign[last]) {
      report.curvature_sign_changes.push_back(0.5 * (rows[last].lambda + rows[i].lambda));
    }
    last = i;
  }
  return report;
}

}  // namespace hyperpann
