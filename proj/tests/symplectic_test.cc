// Copyright 2026 The gaussrx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussrx/symplectic.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"

namespace gaussrx {
namespace {

using std::numbers::pi;

MeasurementParams random_params(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> r(0.0, 1.5);
  std::uniform_real_distribution<double> mag(0.0, pi / 2);
  std::uniform_real_distribution<double> ang(-pi, pi);
  return {r(gen), r(gen), mag(gen), ang(gen), ang(gen), ang(gen)};
}

TEST(SymplecticForm, SingleModeBlock) {
  const SymplecticMatrix d = symplectic_form(1);
  EXPECT_EQ(d(0, 0), 0.0);
  EXPECT_EQ(d(0, 1), 1.0);
  EXPECT_EQ(d(1, 0), -1.0);
  EXPECT_EQ(d(1, 1), 0.0);
}

TEST(SymplecticForm, SquaresToMinusIdentity) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const SymplecticMatrix d = symplectic_form(n);
    EXPECT_TRUE((d * d + Eigen::MatrixXd::Identity(2 * n, 2 * n)).isZero(0.0));
    EXPECT_TRUE((d + d.transpose()).isZero(0.0));
  }
  EXPECT_THROW(symplectic_form(0), std::invalid_argument);
}

TEST(PhaseRotation, ZeroIsIdentityAndQuarterTurnIsDelta) {
  const std::vector<double> zero{0.0, 0.0};
  EXPECT_TRUE(phase_rotation(zero).isIdentity(0.0));
  const std::vector<double> quarter{pi / 2};
  EXPECT_LT((phase_rotation(quarter) - symplectic_form(1)).norm(), 1e-15);
}

TEST(PhaseRotation, ComposesAdditivelyAndIsOrthogonalSymplectic) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> ang(-pi, pi);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> a{ang(gen), ang(gen)}, b{ang(gen), ang(gen)};
    const std::vector<double> ab{a[0] + b[0], a[1] + b[1]};
    const SymplecticMatrix ra = phase_rotation(a);
    EXPECT_LT((ra * phase_rotation(b) - phase_rotation(ab)).norm(), 1e-12);
    EXPECT_TRUE(is_symplectic(ra));
    EXPECT_LT((ra * ra.transpose() - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-12);
  }
  const std::vector<double> bad{std::nan("")};
  EXPECT_THROW(phase_rotation(bad), std::invalid_argument);
}

TEST(Squeezer, MatchesSeriesExponentialOfGenerator) {
  for (double r : {-1.2, -0.3, 0.0, 0.4, 1.7}) {
    const std::vector<double> rs{r};
    EXPECT_LT((squeezer(rs) - testing::series_exp(testing::squeezer_generator(r))).norm(), 1e-12);
    EXPECT_TRUE(is_symplectic(squeezer(rs)));
  }
}

TEST(Squeezer, CovarianceConventionShrinksP) {
  const std::vector<double> zero{0.0};
  EXPECT_TRUE(squeezer_covariance(zero).isApprox(0.5 * Eigen::MatrixXd::Identity(2, 2)));
  const std::vector<double> rs{std::log(2.0)};
  const CovarianceMatrix c = squeezer_covariance(rs);
  EXPECT_NEAR(c(0, 0), 2.0, 1e-14);
  EXPECT_NEAR(c(1, 1), 0.125, 1e-15);
  EXPECT_EQ(c(0, 1), 0.0);
  // The reflected sign is the same state rotated by a quarter turn.
  const std::vector<double> neg{-std::log(2.0)};
  const std::vector<double> quarter{pi / 2};
  const SymplecticMatrix q = phase_rotation(quarter);
  EXPECT_LT((q * c * q.transpose() - squeezer_covariance(neg)).norm(), 1e-14);
}

TEST(Squeezer, EnergyIsSinhSquared) {
  for (double e : {0.0, 0.5, 1.0, 4.0, 16.0}) {
    const std::vector<double> rs{std::asinh(std::sqrt(e))};
    EXPECT_NEAR(covariance_energy(squeezer_covariance(rs)), e, 1e-12 * (1.0 + e));
  }
}

TEST(Beamsplitter, ZeroIsIdentity) { EXPECT_TRUE(beamsplitter(0.0, 0.0).isIdentity(0.0)); }

TEST(Beamsplitter, BalancedMixerHasEqualWeights) {
  const SymplecticMatrix b = beamsplitter(pi / 4, 0.0);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(b(0, 0), h, 1e-15);
  EXPECT_NEAR(b(0, 2), h, 1e-15);
  EXPECT_NEAR(b(2, 0), -h, 1e-15);
  EXPECT_NEAR(b(2, 2), h, 1e-15);
}

TEST(Beamsplitter, MatchesSeriesExponentialOfGenerator) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> mag(0.0, pi / 2);
  std::uniform_real_distribution<double> ang(-pi, pi);
  for (int trial = 0; trial < 100; ++trial) {
    const double m = mag(gen), a = ang(gen);
    const Eigen::MatrixXd oracle = testing::series_exp(testing::beamsplitter_generator(std::polar(m, a)));
    const SymplecticMatrix b = beamsplitter(m, a);
    EXPECT_LT((b - oracle).norm(), 1e-12) << "mag=" << m << " arg=" << a;
    EXPECT_TRUE(is_symplectic(b));
    EXPECT_LT((b * b.transpose() - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-12);
  }
}

TEST(Beamsplitter, RejectsOutOfRangeMagnitude) {
  EXPECT_THROW(beamsplitter(-0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(beamsplitter(pi / 2 + 1e-6, 0.0), std::invalid_argument);
  EXPECT_NO_THROW(beamsplitter(pi / 2, 0.0));
}

TEST(TwoModeSeed, ZeroParamsGiveVacuum) {
  const CovarianceMatrix c = two_mode_pure_covariance({});
  EXPECT_TRUE(c.isApprox(0.5 * Eigen::MatrixXd::Identity(4, 4)));
}

TEST(TwoModeSeed, IsPureWithExpectedEnergy) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    const MeasurementParams p = random_params(gen);
    const CovarianceMatrix c = two_mode_pure_covariance(p);
    const Eigen::VectorXd nu = symplectic_eigenvalues(c);
    EXPECT_NEAR(nu[0], 0.5, 1e-9);
    EXPECT_NEAR(nu[1], 0.5, 1e-9);
    EXPECT_NEAR(c.determinant(), 1.0 / 16.0, 1e-9 * c.norm() * c.norm());
    const double expected = std::pow(std::sinh(p.r1), 2) + std::pow(std::sinh(p.r2), 2);
    EXPECT_NEAR(covariance_energy(c), expected, 1e-10 * (1.0 + expected));
    EXPECT_TRUE(is_valid_covariance(c));
    EXPECT_TRUE(is_symplectic(two_mode_symplectic(p)));
  }
}

TEST(TwoModeSeed, PassiveElementsPreserveEnergy) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    MeasurementParams p = random_params(gen);
    const double e0 = covariance_energy(two_mode_pure_covariance({p.r1, p.r2, 0, 0, 0, 0}));
    EXPECT_NEAR(covariance_energy(two_mode_pure_covariance(p)), e0, 1e-10 * (1.0 + e0));
  }
}

TEST(TwoModeSeed, OptimalSeedSqueezesPhaseDifference) {
  const double e = 4.0;
  const double r = std::asinh(std::sqrt(e));
  const CovarianceMatrix c = two_mode_pure_covariance({r, 0.0, pi / 4, 0.0, 0.0, 0.0});
  Eigen::VectorXd u = Eigen::VectorXd::Zero(4);
  u[1] = 1.0 / std::sqrt(2.0);
  u[3] = -1.0 / std::sqrt(2.0);
  EXPECT_NEAR(u.dot(c * u), std::exp(-2.0 * r) / 2.0, 1e-14);
}

TEST(Validity, DetectsUnphysicalAndAsymmetric) {
  EXPECT_TRUE(is_valid_covariance(0.5 * Eigen::MatrixXd::Identity(2, 2)));
  EXPECT_FALSE(is_valid_covariance(0.1 * Eigen::MatrixXd::Identity(2, 2)));
  Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(2, 2);
  asym(0, 1) = 0.1;
  EXPECT_FALSE(is_valid_covariance(asym));
  EXPECT_FALSE(is_valid_covariance(Eigen::MatrixXd::Identity(3, 3)));
  EXPECT_NEAR(uncertainty_margin(0.5 * Eigen::MatrixXd::Identity(4, 4)), 0.0, 1e-15);
}

TEST(Validity, LargeSqueezingStaysValid) {
  const std::vector<double> rs{std::asinh(std::sqrt(1e8)), 0.0};
  EXPECT_TRUE(is_valid_covariance(squeezer_covariance(rs)));
  EXPECT_TRUE(is_valid_covariance(two_mode_pure_covariance({rs[0], 0.0, pi / 4, 0.3, -1.0, 2.0})));
}

TEST(SymplecticEigenvalues, ThermalStates) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(4, 4);
  c.diagonal() << 1.5, 1.5, 0.75, 0.75;
  const Eigen::VectorXd nu = symplectic_eigenvalues(c);
  EXPECT_NEAR(nu[0], 0.75, 1e-12);
  EXPECT_NEAR(nu[1], 1.5, 1e-12);
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 20; ++trial) {
    const SymplecticMatrix s = two_mode_symplectic(random_params(gen));
    const Eigen::VectorXd mu = symplectic_eigenvalues(s * c * s.transpose());
    EXPECT_NEAR(mu[0], 0.75, 1e-8);
    EXPECT_NEAR(mu[1], 1.5, 1e-8);
  }
}

}  // namespace
}  // namespace gaussrx
