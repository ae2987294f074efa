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

#ifndef GAUSSRX_OPTIMIZER_H
#define GAUSSRX_OPTIMIZER_H

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "gaussrx/ecgm.h"
#include "gaussrx/symplectic.h"

namespace gaussrx {

// Raised when a sweep cell or estimation step fails to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OptimizationResult {
  // Two-mode searches fill best_params and energy_split (fraction of the
  // energy in mode 1). Separable searches fill squeezings and seed.
  MeasurementParams best_params;
  double energy_split = 1.0;
  std::vector<double> squeezings;
  double best_value = 0.0;
  std::size_t objective_evals = 0;
  bool converged = false;
  CovarianceMatrix seed;
};

// Phase-difference Fisher information of a two-mode probe with common
// amplitude alpha and occupations n0_pair, measured with the pure seed
// two_mode_pure_covariance(params).
double objective_two_mode(const MeasurementParams& params, double alpha,
                          std::array<double, 2> n0_pair, std::span<const double> thetas);

// Maximizes objective_two_mode over pure seeds with sinh^2 r1 + sinh^2 r2 = E.
//
// The energy shell is parametrized by the split t in [0, 1]
// (r1 = asinh sqrt(tE), r2 = asinh sqrt((1-t)E)). A 33 x 33 grid over
// (t, |zeta|) with phases held at the counter-rotated values -thetas seeds a
// Nelder-Mead refinement over (t, |zeta|, arg zeta, phi1, phi2). Box
// constraints are enforced by reflection, so the simplex is unconstrained.
// Mirror-image optima are reported with the larger r1.
OptimizationResult optimize_two_mode(double alpha, std::array<double, 2> n0_pair,
                                     std::span<const double> thetas, double energy);

// Best separable seed: each mode squeezed along its own mean-derivative
// quadrature, energy shared as E_j = E y_j^2 / |y|^2 with y searched by
// Nelder-Mead from the equal split.
OptimizationResult optimize_separable(std::span<const double> alphas,
                                      std::span<const double> n0s,
                                      std::span<const double> thetas, double energy,
                                      std::span<const double> v1);

// Separable seed covariance for a given per-mode energy allocation.
CovarianceMatrix separable_seed(std::span<const double> thetas,
                                std::span<const double> mode_energies);

// best_value of optimize_two_mode at theta = 0 for every (n1_grid[i], n2_grid[j]).
// Throws ConvergenceError naming the cell if any optimization fails.
Eigen::MatrixXd noniso_sweep(std::span<const double> n1_grid, std::span<const double> n2_grid,
                             double alpha, double energy);

}  // namespace gaussrx

#endif  // GAUSSRX_OPTIMIZER_H
