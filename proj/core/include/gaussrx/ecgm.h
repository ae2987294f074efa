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

#ifndef GAUSSRX_ECGM_H
#define GAUSSRX_ECGM_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gaussrx/probes.h"
#include "gaussrx/symplectic.h"

namespace gaussrx {

inline constexpr double kDefaultHomodyneEnergy = 1e8;

// Energy-constrained Gaussian measurement: the POVM of phase-space
// displacements of a centered Gaussian seed state with covariance cov_s.
// Zero energy is heterodyne detection; large energy approaches homodyne.
class Ecgm {
 public:
  // Throws std::invalid_argument if cov_s is not a valid covariance.
  explicit Ecgm(CovarianceMatrix cov_s);

  const CovarianceMatrix& seed_covariance() const { return cov_s_; }
  std::size_t n_modes() const { return static_cast<std::size_t>(cov_s_.rows() / 2); }

 private:
  CovarianceMatrix cov_s_;
};

// Mean photon number of the seed, Tr(cov_s)/2 - N/2.
double energy(const Ecgm& m);

Ecgm heterodyne(std::size_t n_modes);

// Pure seed with all energy squeezing one phase-space direction u (unit
// vector in R^{2N}); the conjugate direction Delta u is anti-squeezed:
//   cov_s = (I + (e^{-2r} - 1) u u^T + (e^{2r} - 1) (Delta u)(Delta u)^T) / 2
// with sinh^2 r = energy.
Ecgm squeezed_seed(std::span<const double> direction, double energy);

// squeezed_seed at a large finite energy, standing in for homodyne detection
// of the quadrature u . R.
Ecgm homodyne_limit(std::span<const double> direction, double energy = kDefaultHomodyneEnergy);

// Seed from the two-mode pure-state parametrization.
Ecgm ecgm_from_params(const MeasurementParams& params);

// Outcomes y are reported in quadrature coordinates: y = Delta^T z where z is
// the Weyl-operator label of the POVM element W(z) S W(-z). With this choice
// the outcome density is the normal law N(y; m_rho, cov_rho + cov_s).
CovarianceMatrix outcome_covariance(const GaussianState& state, const Ecgm& m);

double outcome_density(const GaussianState& state, const Ecgm& m, const PhaseSpaceVector& y);
double log_outcome_density(const GaussianState& state, const Ecgm& m, const PhaseSpaceVector& y);

// Maps between the Weyl label z and the reported outcome y.
PhaseSpaceVector outcome_from_weyl(const PhaseSpaceVector& z);
PhaseSpaceVector weyl_from_outcome(const PhaseSpaceVector& y);

// count i.i.d. outcomes, drawn as mean + sqrt(cov) g with the principal
// square root and g standard normal. Deterministic for a fixed seed.
std::vector<PhaseSpaceVector> sample_outcomes(const GaussianState& state, const Ecgm& m,
                                              std::size_t count, std::uint64_t seed);

// Same draws as sample_outcomes, one outcome per column.
Eigen::MatrixXd sample_outcome_matrix(const GaussianState& state, const Ecgm& m,
                                      std::size_t count, std::uint64_t seed);

// Principal square root of a symmetric positive definite matrix.
Eigen::MatrixXd principal_sqrt(const Eigen::MatrixXd& spd);

}  // namespace gaussrx

#endif  // GAUSSRX_ECGM_H
