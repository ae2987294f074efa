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

#ifndef GAUSSRX_ESTIMATOR_H
#define GAUSSRX_ESTIMATOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gaussrx/ecgm.h"
#include "gaussrx/probes.h"

namespace gaussrx {

// Sum of log outcome densities under the received state at thetas.
double log_likelihood(std::span<const double> thetas, std::span<const PhaseSpaceVector> outcomes,
                      const ProbeSpec& spec, const Ecgm& m);
// Same, one outcome per column.
double log_likelihood(std::span<const double> thetas, const Eigen::MatrixXd& outcomes,
                      const ProbeSpec& spec, const Ecgm& m);

// Maximum-likelihood estimate of v1 . theta.
//
// The likelihood is maximized along theta(s) = theta_init + s v1 with the
// orthogonal directions held at theta_init, over |s| < pi/4 (golden-section
// search, then one parabolic step; tolerance 1e-10 in s). Returns
// v1 . theta_hat wrapped to (-pi, pi]. Throws ConvergenceError if the maximum
// sits on the search boundary.
double mle_estimate(const Eigen::MatrixXd& outcomes, const ProbeSpec& spec, const Ecgm& m,
                    std::span<const double> v1, std::span<const double> theta_init);
double mle_estimate(std::span<const PhaseSpaceVector> outcomes, const ProbeSpec& spec,
                    const Ecgm& m, std::span<const double> v1,
                    std::span<const double> theta_init);

// Variant that maximizes over the whole phase vector (Nelder-Mead from
// theta_init) before projecting onto v1.
double mle_estimate_full(const Eigen::MatrixXd& outcomes, const ProbeSpec& spec, const Ecgm& m,
                         std::span<const double> v1, std::span<const double> theta_init);

struct McReport {
  std::size_t m_samples = 0;
  std::size_t repetitions = 0;
  double empirical_variance = 0.0;
  double crb = 0.0;
  double ratio = 0.0;
  std::uint64_t seed = 0;
  double truth = 0.0;
  double mean_estimate = 0.0;
  // Standard error of mean_estimate across repetitions.
  double mean_standard_error = 0.0;
  double f_tilde_11 = 0.0;
};

struct CrbOptions {
  bool full_vector = false;
};

// Runs `repetitions` experiments of m_samples outcomes each, estimates
// v1 . theta by maximum likelihood and compares the spread of the estimates
// with the Cramer-Rao bound 1 / (m_samples * F~_11). Repetition k draws from
// the substream derive_seed(seed, k). Requires m_samples >= 1000 and
// repetitions >= 100.
McReport crb_experiment(const ProbeSpec& spec, std::span<const double> thetas_true,
                        const Ecgm& m, std::span<const double> v1, std::size_t m_samples,
                        std::size_t repetitions, std::uint64_t seed,
                        const CrbOptions& options = {});

}  // namespace gaussrx

#endif  // GAUSSRX_ESTIMATOR_H
