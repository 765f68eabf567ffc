#include "hyperpann/energy_models.hpp"

#include <cmath>

#include "hyperpann/errors.hpp"

namespace hyperpann {

bool OgdenParams::polyconvex_regime() const {
  for (const auto& t : terms) {
    if (!(t.mu * t.exponent > 0.0 && std::abs(t.exponent) >= 1.0)) return false;
  }
  return !terms.empty();
}

OgdenModel::OgdenModel(OgdenParams params, std::string label)
    : params_(std::move(params)), label_(std::move(label)) {
  if (params_.terms.empty()) throw DomainError("Ogden model needs at least one term");
  for (const auto& t : params_.terms) {
    if (t.exponent == 0.0 || !std::isfinite(t.exponent)) {
      throw DomainError("Ogden exponent must be finite and non-zero");
    }
    if (!std::isfinite(t.mu)) throw DomainError("Ogden modulus must be finite");
  }
}

double OgdenModel::energy(const Vec3& s) const {
  double w = 0.0;
  for (const auto& t : params_.terms) {
    const double p = t.exponent;
    w += t.mu / p * (std::pow(s[0], p) + std::pow(s[1], p) + std::pow(s[2], p) - 3.0);
  }
  return w;
}

Vec3 OgdenModel::gradient(const Vec3& s) const {
  Vec3 g{0.0, 0.0, 0.0};
  for (const auto& t : params_.terms) {
    for (std::size_t k = 0; k < 3; ++k) g[k] += t.mu * std::pow(s[k], t.exponent - 1.0);
  }
  return g;
}

double QuarterRootModel::energy(const Vec3& s) const {
  const double i1 = invariants(s, InvariantKind::standard).first;
  return std::pow(i1, 0.25) - std::pow(3.0, 0.25);
}

Vec3 QuarterRootModel::gradient(const Vec3& s) const {
  const double i1 = invariants(s, InvariantKind::standard).first;
  // dW/dI1 = I1^(-3/4)/4, dI1/dl_k = 2 l_k
  const double c1 = 0.25 * std::pow(i1, -0.75);
  return {2.0 * c1 * s[0], 2.0 * c1 * s[1], 2.0 * c1 * s[2]};
}

double MielkeModel::energy(const Vec3& s) const {
  const double a = s[0] - s[1] * s[2];
  const double b = s[1] - s[0] * s[2];
  const double c = s[2] - s[0] * s[1];
  return 0.5 * (a * a + b * b + c * c);
}

Vec3 MielkeModel::gradient(const Vec3& s) const {
  const double a = s[0] - s[1] * s[2];
  const double b = s[1] - s[0] * s[2];
  const double c = s[2] - s[0] * s[1];
  return {a - b * s[2] - c * s[1], b - a * s[2] - c * s[0], c - a * s[1] - b * s[0]};
}

double MielkeModel::reduced_energy(double h1, double h2) {
  const double s1 = std::sinh(h1);
  const double s2 = std::sinh(h2);
  const double s3 = std::sinh(h1 + h2);
  return 2.0 * (s1 * s1 + s2 * s2 + s3 * s3);
}

std::unique_ptr<OgdenModel> ogden(OgdenParams params) {
  return std::make_unique<OgdenModel>(std::move(params));
}

std::unique_ptr<OgdenModel> neo_hooke(double mu) {
  return std::make_unique<OgdenModel>(OgdenParams{{{mu, 2.0}}}, "neo-hooke");
}

std::unique_ptr<OgdenModel> mooney_rivlin(double mu1, double mu2) {
  return std::make_unique<OgdenModel>(OgdenParams{{{mu1, 2.0}, {mu2, -2.0}}}, "mooney-rivlin");
}

std::unique_ptr<OgdenModel> sqrt_ogden() {
  return std::make_unique<OgdenModel>(OgdenParams{{{0.5, 0.5}}}, "sqrt-ogden");
}

std::unique_ptr<QuarterRootModel> quarter_root_model() { return std::make_unique<QuarterRootModel>(); }

std::unique_ptr<MielkeModel> mielke_model() { return std::make_unique<MielkeModel>(); }

double sqrt_ogden_shear_stress(double gamma) {
  const double g2 = gamma * gamma;
  const double root = std::sqrt(4.0 + g2);
  // The minus-branch argument 2 + g^2 - g*root equals 4/(2 + g^2 + g*root);
  // using the product form avoids cancellation at large |gamma|.
  const double plus = 2.0 + g2 + std::abs(gamma) * root;
  const double minus = 4.0 / plus;
  const double diff = std::pow(plus, 0.25) - std::pow(minus, 0.25);
  return std::copysign(diff, gamma) / (std::pow(2.0, 1.25) * root);
}

double quarter_root_shear_stress(double gamma) {
  return gamma / (2.0 * std::pow(3.0 + gamma * gamma, 0.75));
}

}  // namespace hyperpann
