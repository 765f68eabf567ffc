#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hyperpann/errors.hpp"
#include "hyperpann/kinematics.hpp"
#include "test_support.hpp"

using namespace hyperpann;

TEST(PrincipalStretches, IdentityByDefault) {
  const PrincipalStretches s;
  EXPECT_EQ(s.values(), (Vec3{1.0, 1.0, 1.0}));
}

TEST(PrincipalStretches, RejectsNonPositive) {
  EXPECT_THROW(PrincipalStretches(0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(PrincipalStretches(-1.0, -1.0, 1.0), DomainError);
  EXPECT_THROW(PrincipalStretches(std::nan(""), 1.0, 1.0), DomainError);
}

TEST(PrincipalStretches, RejectsCompressibleState) { EXPECT_THROW(PrincipalStretches(2.0, 1.0, 1.0), DomainError); }

TEST(PrincipalStretches, RenormalizesSmallDrift) {
  const PrincipalStretches s(2.0, 0.5, 1.0 + 5e-10);
  EXPECT_DOUBLE_EQ(s[2], 1.0);
}

TEST(PrincipalStretches, FromLogRoundTrip) {
  const auto s = PrincipalStretches::from_log(0.3, -0.7);
  const Vec3 h = s.log_values();
  EXPECT_NEAR(h[0], 0.3, 1e-15);
  EXPECT_NEAR(h[1], -0.7, 1e-15);
  EXPECT_NEAR(h[2], 0.4, 1e-15);
  EXPECT_NEAR(s[0] * s[1] * s[2], 1.0, 1e-15);
}

TEST(DeformationMode, ParseAndPrint) {
  for (auto m : kAllModes) EXPECT_EQ(parse_mode(to_string(m)), m);
  EXPECT_FALSE(parse_mode("XX"));
}

TEST(LoadPaths, Uniaxial) {
  const auto s = stretches_for_mode(DeformationMode::UX, 4.0);
  EXPECT_DOUBLE_EQ(s[0], 4.0);
  EXPECT_DOUBLE_EQ(s[1], 0.5);
  EXPECT_DOUBLE_EQ(s[2], 0.5);
}

TEST(LoadPaths, EquibiaxialAndPureShear) {
  const auto bx = stretches_for_mode(DeformationMode::BX, 2.0);
  EXPECT_DOUBLE_EQ(bx[1], 2.0);
  EXPECT_DOUBLE_EQ(bx[2], 0.25);
  const auto ps = stretches_for_mode(DeformationMode::PS, 2.0);
  EXPECT_DOUBLE_EQ(ps[1], 1.0);
  EXPECT_DOUBLE_EQ(ps[2], 0.5);
}

TEST(LoadPaths, RejectsNonPositiveStretch) {
  EXPECT_THROW(stretches_for_mode(DeformationMode::UX, 0.0), DomainError);
  EXPECT_THROW(stretches_for_mode(DeformationMode::PS, -2.0), DomainError);
}

TEST(Invariants, IdentityIsThree) {
  const auto inv = invariants(PrincipalStretches{}, InvariantKind::standard);
  EXPECT_DOUBLE_EQ(inv.first, 3.0);
  EXPECT_DOUBLE_EQ(inv.second, 3.0);
  const auto k = invariants(PrincipalStretches{}, InvariantKind::sqrt);
  EXPECT_DOUBLE_EQ(k.first, std::sqrt(3.0));
}

TEST(Invariants, UniaxialTwo) {
  // (2, 2^-1/2, 2^-1/2): I1 = 4 + 1/2 + 1/2, I2 = 2 + 2 + 1/4
  const auto inv = invariants(stretches_for_mode(DeformationMode::UX, 2.0), InvariantKind::standard);
  EXPECT_NEAR(inv.first, 5.0, 1e-14);
  EXPECT_NEAR(inv.second, 4.25, 1e-14);
}

TEST(Invariants, PermutationInvariant) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Vec3 s = support::random_incompressible(rng);
    const auto ref = invariants(s, InvariantKind::standard);
    std::sort(s.begin(), s.end());
    do {
      const auto inv = invariants(s, InvariantKind::standard);
      EXPECT_NEAR(inv.first, ref.first, 1e-13 * ref.first);
      EXPECT_NEAR(inv.second, ref.second, 1e-13 * ref.second);
    } while (std::next_permutation(s.begin(), s.end()));
  }
}

TEST(SimpleShear, ZeroIsIdentity) {
  const auto s = simple_shear_stretches(0.0);
  EXPECT_EQ(s.values(), (Vec3{1.0, 1.0, 1.0}));
}

TEST(SimpleShear, GoldenRatioAtUnitShear) {
  const auto s = simple_shear_stretches(1.0);
  EXPECT_NEAR(s[0], 1.6180339887498948, 1e-15);
  EXPECT_NEAR(s[1], 1.0 / 1.6180339887498948, 1e-15);
  EXPECT_DOUBLE_EQ(s[2], 1.0);
}

TEST(SimpleShear, EigenvalueGap) {
  for (double g : {0.01, 0.5, 2.0, 10.0, 100.0}) {
    const auto s = simple_shear_stretches(g);
    EXPECT_NEAR(s[0] * s[0] - s[1] * s[1], g * std::sqrt(4.0 + g * g), 1e-12 * g * g + 1e-14);
    EXPECT_NEAR(s[0] * s[1], 1.0, 1e-14);
  }
}

TEST(SimpleShear, SignSymmetricMultiset) {
  for (double g : {0.3, 1.7, 6.0}) {
    Vec3 a = simple_shear_stretches(g).values();
    Vec3 b = simple_shear_stretches(-g).values();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int k = 0; k < 3; ++k) EXPECT_DOUBLE_EQ(a[k], b[k]);
  }
}
