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

#ifndef GAUSSRX_FISHER_H
#define GAUSSRX_FISHER_H

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gaussrx/ecgm.h"
#include "gaussrx/probes.h"

namespace gaussrx {

// Fisher information of the outcome law N(m(theta), cov(theta) + cov_s):
//
//   F_ij = d_i m^T C^{-1} d_j m + (1/4) tr(d_i cov C^{-1}) tr(d_j cov C^{-1})
//
// The covariance term is the product-of-traces form. It vanishes for every
// displaced thermal probe (their covariance is rotation invariant), and it is
// not the textbook tr(C^{-1} d_i C C^{-1} d_j C)/2 term, so any input where it
// is nonzero is flagged as outside the validated regime.
struct GaussianFisher {
  Eigen::MatrixXd information;
  bool covariance_term_used = false;
};

GaussianFisher gaussian_fisher(std::span<const PhaseSpaceVector> mean_derivs,
                               std::span<const Eigen::MatrixXd> cov_derivs,
                               const CovarianceMatrix& outcome_cov);

// Full N x N Fisher matrix with respect to the phases theta.
// Throws std::domain_error if cov_rho + cov_s is singular.
Eigen::MatrixXd fisher_matrix(const ProbeSpec& spec, std::span<const double> thetas,
                              const Ecgm& m);

// J^T F J for an orthonormal J. Throws if J is not orthonormal to 1e-10.
Eigen::MatrixXd rotate_fisher(const Eigen::MatrixXd& fisher, const Eigen::MatrixXd& basis);

// Fisher information for v1 . theta with the orthogonal complement known:
// (v1 . grad m)^T (cov_rho + cov_s)^{-1} (v1 . grad m).
double linear_function_fi(const ProbeSpec& spec, std::span<const double> thetas, const Ecgm& m,
                          std::span<const double> v1);

// Orthonormal basis whose first column is v1 (Householder completion).
Eigen::MatrixXd basis_with_first(std::span<const double> v1);

// Unit vector (1, -1)/sqrt(2): the phase-difference estimand.
std::vector<double> phase_difference_direction();
// (1, ..., 1)/sqrt(N) with alternating signs; balanced estimand for N modes.
std::vector<double> balanced_direction(std::size_t n_modes);

// Quantum Fisher information of v1 . theta: sum_j v_j^2 * 2 alpha_j^2 / (N_j + 1/2).
double qfi_linear_function(const ProbeSpec& spec, std::span<const double> v1);
// Two-mode phase difference (theta_1 - theta_2)/sqrt(2): sum_j alpha_j^2 / (N_j + 1/2).
double qfi_phase_difference(const ProbeSpec& spec);

// The symmetric logarithmic derivative along theta_j is
//   magnitude_j * (i e^{i theta_j} a_j + h.c.),  magnitude_j = alpha_j / (N_j + 1/2).
struct SldTerm {
  double magnitude = 0.0;
  double phase = 0.0;
};
std::vector<SldTerm> sld_coefficients(const ProbeSpec& spec, std::span<const double> thetas);

// The same operator in this library's phase-space convention, as a linear
// form L = l^T (R - m) with l = cov_rho^{-1} (v . grad m). Its second moment
// l^T cov_rho l equals qfi_linear_function.
PhaseSpaceVector sld_quadrature_vector(const ProbeSpec& spec, std::span<const double> thetas,
                                       std::span<const double> v);

// n0 + 1 + E - sqrt(E^2 + E), evaluated without cancellation at large E.
double isothermal_denominator(double n0, double energy);

// Maximal Fisher information over energy-E Gaussian measurements for an
// isothermal, path-symmetric probe: 2 alpha^2 / (n0 + 1 + E - sqrt(E^2 + E)).
double gfi_closed_form(double alpha, double n0, double energy);

// Best separable measurement, energy split equally over n_modes modes.
double separable_fi_balanced(double alpha, double n0, double energy, std::size_t n_modes);

// Best separable measurement when v1 is dominated by its first entry;
// v11_sq = (v1)_1^2 in (0, 1].
double separable_fi_unbalanced(double alpha, double n0, double energy, double v11_sq);

struct Balanced {
  std::size_t n_modes = 2;
};
struct Unbalanced {
  double v11_sq = 0.5;
};
using SeparableMode = std::variant<Balanced, Unbalanced>;

// gfi_closed_form divided by the separable maximum.
double entanglement_gain(double alpha, double n0, double energy, const SeparableMode& mode);

// g(x) = (x+1) log2(x+1) - x log2 x, with g(0) = 0.
double bosonic_entropy(double mean_occupation);

// Von Neumann entropy in bits of a Gaussian state with this covariance.
double gaussian_entropy(const CovarianceMatrix& cov);

// Entanglement entropy of the optimal two-mode seed: g((sqrt(E+1) - 1)/2).
double entanglement_entropy_of_optimal_seed(double energy);

// Seed parameters attaining gfi_closed_form at theta = 0: all energy squeezed
// into mode 1, then a balanced beamsplitter.
MeasurementParams optimal_isothermal_params(double energy);

// Same seed counter-rotated so that it is optimal at thetas instead of 0.
MeasurementParams counter_rotate(const MeasurementParams& params, std::span<const double> thetas);

// Fisher-information ratio: phase-difference Fisher information at
// thetas_true, using the measurement that is optimal at theta = 0, divided by
// the maximal value 4 alpha^2 / (2 n0 + 1).
double fir(std::span<const double> thetas_true, double alpha, double n0, double energy);

struct FisherReport {
  Eigen::MatrixXd fisher;
  Eigen::MatrixXd rotated;
  double f_tilde_11 = 0.0;
  double qfi = 0.0;
  std::vector<std::string> notes;
};

FisherReport fisher_report(const ProbeSpec& spec, std::span<const double> thetas, const Ecgm& m,
                           std::span<const double> v1);

}  // namespace gaussrx

#endif  // GAUSSRX_FISHER_H
