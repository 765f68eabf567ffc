#pragma once

// Incompressible deformation states in the principal frame.
//
// Deformations are carried as principal stretches only; isotropy makes the
// principal frame sufficient and no 3x3 tensor is ever formed.

#include <array>
#include <optional>
#include <string_view>

namespace hyperpann {

using Vec3 = std::array<double, 3>;

/// Relative tolerance of the incompressibility constraint l1*l2*l3 = 1.
inline constexpr double kIncompressibilityTolerance = 1e-12;
/// Drift below this relative level is absorbed by renormalizing l3.
inline constexpr double kRenormalizationLimit = 1e-9;

/// Principal stretches of an isochoric deformation (det F = 1).
class PrincipalStretches {
 public:
  /// Identity state (1, 1, 1).
  PrincipalStretches() = default;

  /// Validates positivity and incompressibility. A product within 1e-9 of
  /// one is repaired by setting l3 = 1/(l1*l2); anything further away throws
  /// DomainError.
  PrincipalStretches(double l1, double l2, double l3);

  /// State with log-stretches (h1, h2, -h1-h2).
  static PrincipalStretches from_log(double h1, double h2);

  double operator[](std::size_t k) const { return values_[k]; }
  const Vec3& values() const { return values_; }
  /// Hencky components log(l_k).
  Vec3 log_values() const;

 private:
  Vec3 values_{1.0, 1.0, 1.0};
};

enum class DeformationMode { UX, BX, PS };

inline constexpr std::array<DeformationMode, 3> kAllModes{DeformationMode::UX, DeformationMode::BX,
                                                          DeformationMode::PS};

std::string_view to_string(DeformationMode mode);
std::optional<DeformationMode> parse_mode(std::string_view tag);

enum class InvariantKind { standard, sqrt };

/// (I1, I2) for the standard kind, (K1, K2) = (sqrt I1, sqrt I2) for the sqrt kind.
struct InvariantPair {
  double first = 3.0;
  double second = 3.0;
  InvariantKind kind = InvariantKind::standard;
};

/// Stretches along a canonical load path:
///   UX -> (l, l^-1/2, l^-1/2), BX -> (l, l, l^-2), PS -> (l, 1, 1/l).
PrincipalStretches stretches_for_mode(DeformationMode mode, double lambda);

/// I1 = tr C and I2 = tr cof C. Accepts any positive triple; the
/// incompressibility constraint is not required here.
InvariantPair invariants(const Vec3& stretches, InvariantKind kind);
inline InvariantPair invariants(const PrincipalStretches& s, InvariantKind kind) {
  return invariants(s.values(), kind);
}

/// Principal stretches of F = 1 + gamma e1 (x) e2, ordered so that
/// l1^2 - l2^2 = gamma * sqrt(4 + gamma^2); l3 = 1.
PrincipalStretches simple_shear_stretches(double gamma);

}  // namespace hyperpann
