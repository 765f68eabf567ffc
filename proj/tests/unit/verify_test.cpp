#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hyperpann/errors.hpp"
#include "hyperpann/verify.hpp"
#include "test_support.hpp"

using namespace hyperpann;

namespace {

// Finite energy only for h1 <= 1.
class PartialModel final : public EnergyModel {
 public:
  double energy(const Vec3& s) const override {
    return std::log(s[0]) > 1.0 ? std::numeric_limits<double>::quiet_NaN() : inner_->energy(s);
  }
  Vec3 gradient(const Vec3& s) const override { return inner_->gradient(s); }
  std::string name() const override { return "partial"; }

 private:
  std::unique_ptr<OgdenModel> inner_ = neo_hooke(1.0);
};

// Closed-form reduced Hessian of neo-Hooke: W_red = mu/2 (e^2h1 + e^2h2 + e^-2(h1+h2) - 3).
Matrix2 neo_hooke_reduced_hessian(double mu, double h1, double h2) {
  const double a = std::exp(2.0 * h1), b = std::exp(2.0 * h2), c = std::exp(-2.0 * (h1 + h2));
  return {{{2.0 * mu * (a + c), 2.0 * mu * c}, {2.0 * mu * c, 2.0 * mu * (b + c)}}};
}

double mielke_w11(double lambda) {
  const Vec3 h{std::log(lambda), -std::log(lambda), 0.0};
  return log_stretch_hessian(*mielke_model(), h)[0][0];
}

}  // namespace

TEST(ReducedHessian, NeoHookeAtOrigin) {
  const auto h = reduced_hessian(*neo_hooke(1.0), 0.0, 0.0);
  EXPECT_NEAR(h.matrix[0][0], 4.0, 1e-6);
  EXPECT_NEAR(h.matrix[0][1], 2.0, 1e-6);
  EXPECT_NEAR(h.matrix[1][1], 4.0, 1e-6);
  EXPECT_NEAR(h.eigenvalues[0], 2.0, 1e-6);
  EXPECT_NEAR(h.eigenvalues[1], 6.0, 1e-6);
  EXPECT_EQ(h.matrix[0][1], h.matrix[1][0]);
}

TEST(ReducedHessian, NeoHookeClosedFormBothRoutes) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const auto nh = neo_hooke(0.7);
  for (int i = 0; i < 100; ++i) {
    const double h1 = u(rng), h2 = u(rng);
    const Matrix2 ref = neo_hooke_reduced_hessian(0.7, h1, h2);
    const auto a = reduced_hessian(*nh, h1, h2);
    const auto b = projected_hessian(*nh, h1, h2);
    const double scale = std::abs(ref[0][0]) + std::abs(ref[1][1]);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        EXPECT_LT(std::abs(a.matrix[r][c] - ref[r][c]) / scale, 1e-6);
        EXPECT_LT(std::abs(b.matrix[r][c] - ref[r][c]) / scale, 1e-6);
      }
    }
    EXPECT_LE(a.eigenvalues[0], a.eigenvalues[1]);
  }
}

TEST(ReducedHessian, TwoRoutesAgreeForEveryModel) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<support::NamedModel> models = support::catalog();
  for (auto t : kAllArchitectures) {
    models.push_back({std::string(to_string(t)), std::make_shared<PannArchitecture>(build_architecture(t, 16, 0))});
  }
  for (const auto& m : models) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double h1 = u(rng), h2 = u(rng);
      worst = std::max(worst, relative_discrepancy(reduced_hessian(*m.model, h1, h2),
                                                   projected_hessian(*m.model, h1, h2)));
    }
    EXPECT_LT(worst, 1e-6) << m.name;
  }
}

TEST(ReducedHessian, NonFiniteEnergyThrows) {
  EXPECT_THROW(reduced_hessian(PartialModel(), 1.0 + 5e-5, 0.0), EvaluationError);
  EXPECT_THROW(reduced_hessian(*neo_hooke(1.0), std::nan(""), 0.0), DomainError);
}

TEST(Mielke, UnconstrainedSecondDerivativeAlongPureShear) {
  // sympy: d2W/dh1^2 at (lambda, 1/lambda, 1) = 4 lambda^2 - 1 (tests/oracles/derive_values.py)
  EXPECT_NEAR(mielke_w11(0.25), -0.75, 1e-6);
  EXPECT_NEAR(mielke_w11(0.4), -0.36, 1e-6);
  EXPECT_NEAR(mielke_w11(0.6), 0.44, 1e-6);
}

TEST(Mielke, SignChangeAtOneHalf) {
  double lo = 0.3, hi = 0.7;
  ASSERT_LT(mielke_w11(lo), 0.0);
  ASSERT_GT(mielke_w11(hi), 0.0);
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (mielke_w11(mid) < 0.0 ? lo : hi) = mid;
  }
  EXPECT_NEAR(0.5 * (lo + hi), 0.5, 1e-3);
}

TEST(Mielke, ReducedHessianPositiveDefinite) {
  const auto m = mielke_model();
  const auto h = reduced_hessian(*m, 0.0, 0.0);
  EXPECT_GT(h.eigenvalues[0], 0.0);
  // 2 sinh^2 terms: Hessian at origin is [[8, 4], [4, 8]]
  EXPECT_NEAR(h.matrix[0][0], 8.0, 1e-6);
  EXPECT_NEAR(h.matrix[0][1], 4.0, 1e-6);
  EXPECT_TRUE(hill_grid_check(*m).passed);
}

TEST(HillGrid, OgdenFamilies) {
  EXPECT_TRUE(hill_grid_check(*ogden({{{1.0, 2.0}}})).passed);
  const auto r = hill_grid_check(*ogden({{{1.0, 0.5}}}));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.evaluated, 441u);
  EXPECT_TRUE(r.witnesses.empty());
}

TEST(HillGrid, QuarterRootIsConvexInLogStretches) {
  // I1^(1/4) = exp(log-sum-exp(2h) / 4) is strictly convex on the traceless plane
  const auto r = hill_grid_check(*quarter_root_model());
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.findings.at("min_eigenvalue"), 0.0);
}

TEST(HillGrid, EvaluationErrorsBecomeWitnesses) {
  const auto r = hill_grid_check(PartialModel());
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_NE(r.witnesses.front().note.find("non-finite"), std::string::npos);
  EXPECT_THROW(hill_grid_check(PartialModel(), {-1.0, 1.0, 1}), DomainError);
}

TEST(Report, MarginalClassification) {
  VerificationReport r;
  r.require_positive({1.0}, 1e-300);
  EXPECT_TRUE(r.passed);
  r.require_positive({2.0}, -1e-11);
  r.require_positive({0.5}, 0.0);
  r.require_positive({3.0}, -1e-9);
  EXPECT_FALSE(r.passed);
  r.sort_witnesses();
  ASSERT_EQ(r.witnesses.size(), 3u);
  EXPECT_EQ(r.witnesses[0].state[0], 0.5);
  EXPECT_TRUE(r.witnesses[0].marginal);
  EXPECT_TRUE(r.witnesses[1].marginal);
  EXPECT_FALSE(r.witnesses[2].marginal);
  const auto j = r.to_json();
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["witnesses"].size(), 3u);
  EXPECT_EQ(j["evaluated"], 4);
}

TEST(Tsts, NeoHookePasses) {
  const auto r = tsts_m_sample(*neo_hooke(1.0), 1000, 0);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.evaluated, 1000u);
}

TEST(Tsts, QuarterRootRegression) {
  // observed on first run: every sampled pairing is positive
  const auto r = tsts_m_sample(*quarter_root_model(), 1000, 0);
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.findings.at("min_pairing"), 0.0);
}

TEST(Tsts, GaugeInvariance) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> p(-50.0, 50.0);
  for (const auto& m : support::catalog()) {
    const auto base = tsts_m_sample(*m.model, 300, 4);
    for (int shift = 0; shift < 3; ++shift) {
      const auto r = tsts_m_sample(*m.model, 300, 4, {kDefaultLogRange, p(rng), p(rng)});
      EXPECT_EQ(r.passed, base.passed) << m.name;
      EXPECT_EQ(r.witnesses.size(), base.witnesses.size()) << m.name;
      EXPECT_LT(support::relative_error(r.findings.at("min_pairing"), base.findings.at("min_pairing")), 1e-6);
    }
  }
}

TEST(Ordering, PassesForConvexModels) {
  EXPECT_TRUE(principal_stress_ordering(*ogden({{{1.0, 2.0}}}), 1000, 0).passed);
  const auto r = principal_stress_ordering(*mielke_model(), 1000, 0);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.evaluated, 3000u);
}

TEST(ImplicationChain, HillImpliesTstsAndOrdering) {
  for (const auto& m : support::catalog()) {
    if (!hill_grid_check(*m.model).passed) continue;
    EXPECT_TRUE(tsts_m_sample(*m.model, 1000, 1).passed) << m.name;
    EXPECT_TRUE(principal_stress_ordering(*m.model, 1000, 1).passed) << m.name;
  }
}

TEST(Shear, NeoHookeMonotone) {
  const auto r = shear_monotonicity(*neo_hooke(1.0), 10.0, 1001);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.findings.count("peak_gamma"));
}

TEST(Shear, QuarterRootPeak) {
  const auto r = shear_monotonicity(*quarter_root_model(), 10.0, 1001, quarter_root_shear_stress);
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.findings.at("peak_gamma"), std::sqrt(6.0), 1e-3);
  EXPECT_LT(r.findings.at("closed_form_max_relative"), 1e-9);
}

TEST(Shear, SqrtOgdenDescends) {
  const auto r = shear_monotonicity(*sqrt_ogden(), 10.0, 1001, sqrt_ogden_shear_stress);
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses.front().note, "descending segment");
  EXPECT_LT(r.witnesses.front().value, 0.0);
  EXPECT_NEAR(r.findings.at("peak_gamma"), 3.4641016151377546, 1e-6);
}

TEST(Shear, ClosedFormMismatchFails) {
  const auto r = shear_monotonicity(*neo_hooke(1.0), 10.0, 101, quarter_root_shear_stress);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.witnesses.front().note, "generic route disagrees with closed form");
  EXPECT_THROW(shear_monotonicity(*neo_hooke(1.0), 0.0, 10), DomainError);
}

TEST(Majorization, DiagonalExampleHoldsWithEquality) {
  const Matrix3 f1{{{3, 0, 0}, {0, 2, 0}, {0, 0, 1}}};
  const Matrix3 f2{{{3, 0, 0}, {0, 1, 0}, {0, 0, 2}}};
  Matrix3 mid{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) mid[i][j] = 0.5 * (f1[i][j] + f2[i][j]);
  const Vec3 s = singular_values(mid);
  EXPECT_NEAR(s[0], 3.0, 1e-14);
  EXPECT_NEAR(s[1], 1.5, 1e-14);
  EXPECT_NEAR(s[2], 1.5, 1e-14);
  const Vec3 a = singular_values(f1), b = singular_values(f2);
  const Vec3 combo{0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]), 0.5 * (a[2] + b[2])};
  EXPECT_TRUE(weakly_submajorized(s, combo, 1e-13));
  // entry-wise the third singular value is not convex: 1.5 > 1
  EXPECT_GT(s[2], combo[2]);
}

TEST(Majorization, SubmajorizationOrdering) {
  EXPECT_TRUE(weakly_submajorized({1.0, 1.0, 1.0}, {3.0, 0.0, 0.0}));
  EXPECT_FALSE(weakly_submajorized({3.0, 0.0, 0.0}, {1.0, 1.0, 1.0}));
  EXPECT_TRUE(weakly_submajorized({0.0, 2.0, 1.0}, {1.0, 2.0, 0.0}));
}

TEST(Birkhoff, KnownDecompositions) {
  const auto id = birkhoff_decomposition({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].weight, 1.0);
  EXPECT_EQ(id[0].permutation, (std::array<int, 3>{0, 1, 2}));

  const auto half = birkhoff_decomposition({{{0.5, 0.5, 0}, {0.5, 0.5, 0}, {0, 0, 1}}});
  ASSERT_EQ(half.size(), 2u);
  EXPECT_EQ(half[0].weight, 0.5);
  EXPECT_EQ(half[1].weight, 0.5);
  EXPECT_EQ(half[0].permutation, (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(half[1].permutation, (std::array<int, 3>{1, 0, 2}));
}

TEST(Birkhoff, RandomMatricesReconstruct) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const Matrix3 d = random_doubly_stochastic(rng);
    const auto terms = birkhoff_decomposition(d);
    EXPECT_LE(terms.size(), 7u);
    const Matrix3 back = reconstruct(terms);
    double total = 0.0;
    for (const auto& t : terms) {
      EXPECT_GE(t.weight, 0.0);
      total += t.weight;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_NEAR(back[i][j], d[i][j], 1e-12);
  }
  EXPECT_THROW(birkhoff_decomposition({{{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}}}), DomainError);
}

TEST(Majorization, RandomRotationIsOrthogonal) {
  std::mt19937_64 rng(3);
  const Matrix3 r = random_rotation(rng);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += r[i][k] * r[j][k];
      EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-14);
    }
  }
}

TEST(Majorization, SuitePasses) {
  const auto r = majorization_suite(1000, 0);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.evaluated, 3000u);
  EXPECT_LT(r.findings.at("birkhoff_max_error"), 1e-10);
  EXPECT_LE(r.findings.at("birkhoff_max_terms"), 7.0);
  EXPECT_THROW(majorization_suite(0, 0), DomainError);
}

TEST(Report, DeterministicForSeed) {
  const auto a = tsts_m_sample(*mielke_model(), 200, 5).to_json();
  const auto b = tsts_m_sample(*mielke_model(), 200, 5).to_json();
  EXPECT_EQ(a, b);
}
