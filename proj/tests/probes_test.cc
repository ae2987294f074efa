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

#include "gaussrx/probes.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"

namespace gaussrx {
namespace {

using std::numbers::pi;

TEST(ProbeState, CoherentPairAtZeroTemperature) {
  const GaussianState s = probe_state(ProbeSpec::uniform(2, 1.0, 0.0));
  Eigen::VectorXd expected(4);
  expected << std::sqrt(2.0), 0.0, std::sqrt(2.0), 0.0;
  EXPECT_LT((s.mean - expected).norm(), 1e-15);
  EXPECT_TRUE(s.cov.isApprox(0.5 * Eigen::MatrixXd::Identity(4, 4)));
}

TEST(ProbeState, VacuumAndThermal) {
  const GaussianState vac = probe_state(ProbeSpec::uniform(2, 0.0, 0.0));
  EXPECT_TRUE(vac.mean.isZero(0.0));
  const GaussianState th = probe_state(ProbeSpec::uniform(2, 1.0, 0.5));
  EXPECT_TRUE(th.cov.isIdentity(0.0));
}

TEST(ProbeState, RejectsBadSpecs) {
  EXPECT_THROW(probe_state({{1.0, 1.0}, {0.0, -0.1}}), std::invalid_argument);
  EXPECT_THROW(probe_state({{1.0, 1.0}, {0.0}}), std::invalid_argument);
  EXPECT_THROW(probe_state({{}, {}}), std::invalid_argument);
}

TEST(ImprintPhases, ZeroIsIdentity) {
  const GaussianState s = probe_state({{1.0, 0.7}, {0.2, 0.0}});
  const std::vector<double> zero{0.0, 0.0};
  const GaussianState t = imprint_phases(s, zero);
  EXPECT_EQ(t.mean, s.mean);
  EXPECT_EQ(t.cov, s.cov);
}

TEST(ImprintPhases, QuarterTurnMovesMeanIntoP) {
  const std::vector<double> th{pi / 2, 0.0};
  const GaussianState t = received_state(ProbeSpec::uniform(2, 1.0, 0.0), th);
  EXPECT_NEAR(t.mean[0], 0.0, 1e-15);
  EXPECT_NEAR(t.mean[1], std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(t.mean[2], std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(t.mean[3], 0.0, 1e-15);
}

TEST(ImprintPhases, PreservesNormAndThermalCovariance) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> ang(-pi, pi), amp(-2.0, 2.0), occ(0.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const ProbeSpec spec{{amp(gen), amp(gen), amp(gen)}, {occ(gen), occ(gen), occ(gen)}};
    const std::vector<double> th{ang(gen), ang(gen), ang(gen)};
    const GaussianState s = probe_state(spec);
    const GaussianState t = imprint_phases(s, th);
    EXPECT_NEAR(t.mean.norm(), s.mean.norm(), 1e-12);
    EXPECT_LT((t.cov - s.cov).norm(), 1e-14);
  }
  const std::vector<double> wrong{0.0};
  EXPECT_THROW(received_state(ProbeSpec::uniform(2, 1.0, 0.0), wrong), std::invalid_argument);
}

TEST(ApplyChannel, Examples) {
  const ProbeSpec spec{{2.0}, {0.0}};
  const ProbeSpec same = apply_channel(spec, {});
  EXPECT_EQ(same.alphas, spec.alphas);
  EXPECT_EQ(same.thermal_occupations, spec.thermal_occupations);
  EXPECT_DOUBLE_EQ(apply_channel(spec, {0.5, 0.0}).alphas[0], 1.0);
  EXPECT_DOUBLE_EQ(apply_channel(spec, {1.0, 0.3}).thermal_occupations[0], 0.3);
  EXPECT_THROW(apply_channel(spec, {1.5, 0.0}), std::invalid_argument);
  EXPECT_THROW(apply_channel(spec, {0.5, -1.0}), std::invalid_argument);
}

TEST(ApplyChannel, Composes) {
  std::mt19937_64 gen(22);
  std::uniform_real_distribution<double> unit(0.0, 1.0), occ(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const ProbeSpec spec{{occ(gen), -occ(gen)}, {occ(gen), occ(gen)}};
    const ChannelSpec a{unit(gen), occ(gen)}, b{unit(gen), occ(gen)};
    const ProbeSpec twice = apply_channel(apply_channel(spec, a), b);
    const ProbeSpec once = apply_channel(spec, {a.eta * b.eta, a.n_channel + b.n_channel});
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_NEAR(twice.alphas[j], once.alphas[j], 1e-14);
      EXPECT_NEAR(twice.thermal_occupations[j], once.thermal_occupations[j], 1e-14);
    }
  }
}

TEST(PhaseDerivative, DifferenceDirectionAtZero) {
  const double a1 = 0.8, a2 = 1.3;
  const ProbeSpec spec{{a1, a2}, {0.0, 0.0}};
  const std::vector<double> th{0.0, 0.0};
  const std::vector<double> v{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
  const PhaseSpaceVector d = phase_derivative_of_mean(spec, th, v);
  Eigen::VectorXd difference(4);
  difference << 0.0, std::sqrt(2.0) * a1, 0.0, -std::sqrt(2.0) * a2;
  EXPECT_LT((d - difference / std::sqrt(2.0)).norm(), 1e-15);
}

TEST(PhaseDerivative, BalancedNormIsTwoAlphaSquared) {
  const double alpha = 1.7;
  const std::vector<double> th{0.4, -2.0};
  const std::vector<double> v{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
  const PhaseSpaceVector d = phase_derivative_of_mean(ProbeSpec::uniform(2, alpha, 0.3), th, v);
  EXPECT_NEAR(d.squaredNorm(), 2.0 * alpha * alpha, 1e-13);
}

TEST(PhaseDerivative, MatchesFiniteDifferences) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> ang(-pi, pi), amp(0.1, 2.0), occ(0.0, 1.0);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    ProbeSpec spec;
    std::vector<double> th(n), v(n);
    double norm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      spec.alphas.push_back(amp(gen));
      spec.thermal_occupations.push_back(occ(gen));
      th[j] = ang(gen);
      v[j] = normal(gen);
      norm += v[j] * v[j];
    }
    for (double& x : v) x /= std::sqrt(norm);
    const auto mean_along = [&](double s) {
      std::vector<double> t(th);
      for (std::size_t j = 0; j < n; ++j) t[j] += s * v[j];
      return Eigen::VectorXd(received_state(spec, t).mean);
    };
    const Eigen::VectorXd fd = testing::central_difference(mean_along, 0.0);
    const PhaseSpaceVector d = phase_derivative_of_mean(spec, th, v);
    EXPECT_LT((fd - d).norm() / d.norm(), 1e-6);
    double expected = 0.0;
    for (std::size_t j = 0; j < n; ++j) expected += 2.0 * v[j] * v[j] * spec.alphas[j] * spec.alphas[j];
    EXPECT_NEAR(d.squaredNorm(), expected, 1e-12);
  }
}

TEST(PhaseDerivative, RejectsNonUnitDirection) {
  const std::vector<double> th{0.0, 0.0};
  const std::vector<double> v{1.0, 1.0};
  EXPECT_THROW(phase_derivative_of_mean(ProbeSpec::uniform(2, 1.0, 0.0), th, v),
               std::invalid_argument);
  const std::vector<double> nearly{1.0 + 1e-10, 0.0};
  EXPECT_THROW(require_unit(nearly), std::invalid_argument);
}

TEST(MeanDerivatives, OnePerMode) {
  const std::vector<double> th{0.3, 1.1};
  const auto ds = mean_derivatives(ProbeSpec::uniform(2, 1.0, 0.0), th);
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_NEAR(ds[0][0], -std::sqrt(2.0) * std::sin(0.3), 1e-15);
  EXPECT_NEAR(ds[0][1], std::sqrt(2.0) * std::cos(0.3), 1e-15);
  EXPECT_EQ(ds[0][2], 0.0);
  EXPECT_EQ(ds[1][0], 0.0);
}

}  // namespace
}  // namespace gaussrx
