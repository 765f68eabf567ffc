#include "hyperpann/kinematics.hpp"

#include <cmath>
#include <sstream>

#include "hyperpann/errors.hpp"

namespace hyperpann {

PrincipalStretches::PrincipalStretches(double l1, double l2, double l3) {
  if (!(l1 > 0.0 && l2 > 0.0 && l3 > 0.0) || !std::isfinite(l1) || !std::isfinite(l2) ||
      !std::isfinite(l3)) {
    std::ostringstream msg;
    msg << "principal stretches must be positive and finite, got (" << l1 << ", " << l2 << ", " << l3
        << ")";
    throw DomainError(msg.str());
  }
  const double det = l1 * l2 * l3;
  if (std::abs(det - 1.0) > kRenormalizationLimit) {
    std::ostringstream msg;
    msg << "stretches (" << l1 << ", " << l2 << ", " << l3 << ") violate incompressibility, det = "
        << det;
    throw DomainError(msg.str());
  }
  values_ = {l1, l2, 1.0 / (l1 * l2)};
}

PrincipalStretches PrincipalStretches::from_log(double h1, double h2) {
  if (!std::isfinite(h1) || !std::isfinite(h2)) {
    throw DomainError("log-stretches must be finite");
  }
  return PrincipalStretches(std::exp(h1), std::exp(h2), std::exp(-h1 - h2));
}

Vec3 PrincipalStretches::log_values() const {
  return {std::log(values_[0]), std::log(values_[1]), std::log(values_[2])};
}

std::string_view to_string(DeformationMode mode) {
  switch (mode) {
    case DeformationMode::UX:
      return "UX";
    case DeformationMode::BX:
      return "BX";
    case DeformationMode::PS:
      return "PS";
  }
  return "?";
}

std::optional<DeformationMode> parse_mode(std::string_view tag) {
  if (tag == "UX") return DeformationMode::UX;
  if (tag == "BX") return DeformationMode::BX;
  if (tag == "PS") return DeformationMode::PS;
  return std::nullopt;
}

PrincipalStretches stretches_for_mode(DeformationMode mode, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("stretch must be positive and finite, got " + std::to_string(lambda));
  }
  switch (mode) {
    case DeformationMode::UX: {
      const double t = 1.0 / std::sqrt(lambda);
      return PrincipalStretches(lambda, t, t);
    }
    case DeformationMode::BX:
      return PrincipalStretches(lambda, lambda, 1.0 / (lambda * lambda));
    case DeformationMode::PS:
      return PrincipalStretches(lambda, 1.0, 1.0 / lambda);
  }
  throw ContractViolation("unknown deformation mode");
}

InvariantPair invariants(const Vec3& s, InvariantKind kind) {
  const double c1 = s[0] * s[0];
  const double c2 = s[1] * s[1];
  const double c3 = s[2] * s[2];
  const double i1 = c1 + c2 + c3;
  const double i2 = c2 * c3 + c3 * c1 + c1 * c2;
  if (kind == InvariantKind::sqrt) return {std::sqrt(i1), std::sqrt(i2), kind};
  return {i1, i2, kind};
}

PrincipalStretches simple_shear_stretches(double gamma) {
  // Evaluate the larger root for |gamma| to avoid cancellation, then order.
  const double g = std::abs(gamma);
  const double major = std::sqrt(0.5 * (2.0 + g * g + g * std::sqrt(4.0 + g * g)));
  const double minor = 1.0 / major;
  if (gamma >= 0.0) return PrincipalStretches(major, minor, 1.0);
  return PrincipalStretches(minor, major, 1.0);
}

}  // namespace hyperpann
