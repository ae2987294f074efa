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

#ifndef GAUSSRX_SYMPLECTIC_H
#define GAUSSRX_SYMPLECTIC_H

#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace gaussrx {

// Phase-space conventions used throughout the library:
//
//   * Quadratures are ordered (q_1, p_1, ..., q_N, p_N) with hbar = 1, so the
//     vacuum covariance is I/2 and a = (q + i p) / sqrt(2).
//   * Vectors are columns. A Gaussian unitary acts on first and second moments
//     as  mean -> M mean,  cov -> M cov M^T  where M is its Heisenberg matrix.
//   * The symplectic form is a direct sum of ((0, 1), (-1, 0)) blocks.
//   * Positive squeezing r shrinks the p quadrature: a single-mode squeezed
//     vacuum has covariance diag(e^{2r}/2, e^{-2r}/2). Phase information on a
//     real-amplitude probe lives in p, so positive r is the useful sign.

using PhaseSpaceVector = Eigen::VectorXd;
using CovarianceMatrix = Eigen::MatrixXd;
using SymplecticMatrix = Eigen::MatrixXd;

inline constexpr double kSymplecticTol = 1e-9;
inline constexpr double kSymmetryTol = 1e-10;

// Block-diagonal symplectic form for n_modes modes. Throws on n_modes == 0.
SymplecticMatrix symplectic_form(std::size_t n_modes);

// Direct sum of 2x2 rotations V = ((cos t, sin t), (-sin t, cos t)).
SymplecticMatrix phase_rotation(std::span<const double> thetas);

// Heisenberg matrix of the product of single-mode squeezers, one per entry.
SymplecticMatrix squeezer(std::span<const double> rs);

// Covariance of a product of single-mode squeezed vacua.
// Its mean photon number is sum_j sinh^2(r_j).
CovarianceMatrix squeezer_covariance(std::span<const double> rs);

// Two-mode beamsplitter exp(zeta a1^dag a2 - conj(zeta) a2^dag a1) with
// zeta = zeta_mag * exp(i zeta_arg). In the Heisenberg picture
//   a1 -> cos|zeta| a1 + e^{i arg} sin|zeta| a2
//   a2 -> -e^{-i arg} sin|zeta| a1 + cos|zeta| a2.
// Throws std::invalid_argument unless 0 <= zeta_mag <= pi/2.
SymplecticMatrix beamsplitter(double zeta_mag, double zeta_arg);

// Smallest eigenvalue of the Hermitian matrix cov + (i/2) Delta.
double uncertainty_margin(const CovarianceMatrix& cov);

bool is_valid_covariance(const CovarianceMatrix& cov);
bool is_symplectic(const SymplecticMatrix& t);

// Williamson (symplectic) eigenvalues, ascending, one per mode.
Eigen::VectorXd symplectic_eigenvalues(const CovarianceMatrix& cov);

// Parameters of a pure, centered two-mode Gaussian state: squeeze each mode,
// mix them on a beamsplitter, then rotate each mode by phi_j.
struct MeasurementParams {
  double r1 = 0.0;
  double r2 = 0.0;
  double zeta_mag = 0.0;
  double zeta_arg = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
};

// Heisenberg matrix phase_rotation(phi) * beamsplitter(zeta) * squeezer(r).
SymplecticMatrix two_mode_symplectic(const MeasurementParams& params);

// M (I/2) M^T for M = two_mode_symplectic(params). Always pure.
CovarianceMatrix two_mode_pure_covariance(const MeasurementParams& params);

// Mean photon number of a state with this covariance and zero mean:
// Tr(cov)/2 - N/2.
double covariance_energy(const CovarianceMatrix& cov);

}  // namespace gaussrx

#endif  // GAUSSRX_SYMPLECTIC_H
