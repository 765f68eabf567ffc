#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperpann/kinematics.hpp"

namespace hyperpann {

/// Isotropic strain-energy function W(l1, l2, l3) [MPa] with its analytic
/// stretch gradient dW/dl_k.
///
/// Implementations must accept any positive stretch triple, not only
/// incompressible ones: the projected Hessian and the Lagrange-multiplier
/// stress formula differentiate off the constraint surface.
class EnergyModel {
 public:
  virtual ~EnergyModel() = default;

  virtual double energy(const Vec3& stretches) const = 0;
  virtual Vec3 gradient(const Vec3& stretches) const = 0;
  virtual std::string name() const = 0;

  double energy(const PrincipalStretches& s) const { return energy(s.values()); }
  Vec3 gradient(const PrincipalStretches& s) const { return gradient(s.values()); }
};

struct OgdenTerm {
  double mu = 0.0;  // MPa
  double exponent = 2.0;
};

struct OgdenParams {
  std::vector<OgdenTerm> terms;

  /// mu*p > 0 and |p| >= 1 for every term, the regime in which a single
  /// term is polyconvex and satisfies Hill's inequality.
  bool polyconvex_regime() const;
};

/// W = sum_i (mu_i/p_i)(l1^p_i + l2^p_i + l3^p_i - 3).
class OgdenModel final : public EnergyModel {
 public:
  using EnergyModel::energy;
  using EnergyModel::gradient;

  explicit OgdenModel(OgdenParams params, std::string label = "ogden");

  double energy(const Vec3& s) const override;
  Vec3 gradient(const Vec3& s) const override;
  std::string name() const override { return label_; }

  const OgdenParams& params() const { return params_; }

 private:
  OgdenParams params_;
  std::string label_;
};

/// W = I1^(1/4) - 3^(1/4): monotone in I1 but not convex in it; its shear
/// response peaks at gamma = sqrt(6).
class QuarterRootModel final : public EnergyModel {
 public:
  using EnergyModel::energy;
  using EnergyModel::gradient;

  double energy(const Vec3& s) const override;
  Vec3 gradient(const Vec3& s) const override;
  std::string name() const override { return "quarter-root"; }
};

/// W = 1/2 (l1 - l2 l3)^2 + 1/2 (l2 - l1 l3)^2 + 1/2 (l3 - l1 l2)^2.
class MielkeModel final : public EnergyModel {
 public:
  using EnergyModel::energy;
  using EnergyModel::gradient;

  double energy(const Vec3& s) const override;
  Vec3 gradient(const Vec3& s) const override;
  std::string name() const override { return "mielke"; }

  /// Incompressible closed form 2 sinh^2(h1) + 2 sinh^2(h2) + 2 sinh^2(h1 + h2).
  static double reduced_energy(double h1, double h2);
};

std::unique_ptr<OgdenModel> ogden(OgdenParams params);
std::unique_ptr<OgdenModel> neo_hooke(double mu);
std::unique_ptr<OgdenModel> mooney_rivlin(double mu1, double mu2);
/// sqrt(l1) + sqrt(l2) + sqrt(l3) - 3, i.e. one Ogden term with mu = p = 1/2.
std::unique_ptr<OgdenModel> sqrt_ogden();
std::unique_ptr<QuarterRootModel> quarter_root_model();
std::unique_ptr<MielkeModel> mielke_model();

/// Closed-form true shear stress of sqrt_ogden() in simple shear.
double sqrt_ogden_shear_stress(double gamma);
/// Closed-form true shear stress of quarter_root_model() in simple shear.
double quarter_root_shear_stress(double gamma);

}  // namespace hyperpann
