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

#include "gaussrx/optimizer.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "gaussrx/fisher.h"
#include "gaussrx/nelder_mead.h"
#include "gaussrx/probes.h"

namespace gaussrx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kGridPoints = 33;

// Folds u onto [0, length] by reflection at both ends.
double reflect(double u, double length) {
  double m = std::fmod(u, 2.0 * length);
  if (m < 0.0) m += 2.0 * length;
  return m <= length ? m : 2.0 * length - m;
}

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  return w <= -kPi ? w + 2.0 * kPi : w;
}

MeasurementParams shell_params(double t, double mag, double arg, double phi1, double phi2,
                               double energy) {
  MeasurementParams p;
  p.r1 = std::asinh(std::sqrt(t * energy));
  p.r2 = std::asinh(std::sqrt((1.0 - t) * energy));
  p.zeta_mag = mag;
  p.zeta_arg = arg;
  p.phi1 = phi1;
  p.phi2 = phi2;
  return p;
}

void require_energy(double energy) {
  if (!(energy >= 0.0) || !std::isfinite(energy)) {
    throw std::invalid_argument("energy must be finite and >= 0");
  }
}

}  // namespace

double objective_two_mode(const MeasurementParams& params, double alpha,
                          std::array<double, 2> n0_pair, std::span<const double> thetas) {
  const ProbeSpec spec{{alpha, alpha}, {n0_pair[0], n0_pair[1]}};
  return linear_function_fi(spec, thetas, ecgm_from_params(params), phase_difference_direction());
}

OptimizationResult optimize_two_mode(double alpha, std::array<double, 2> n0_pair,
                                     std::span<const double> thetas, double energy) {
  require_energy(energy);
  if (thetas.size() != 2) throw std::invalid_argument("optimize_two_mode: two angles required");

  OptimizationResult result;
  auto evaluate = [&](const MeasurementParams& p) {
    ++result.objective_evals;
    return objective_two_mode(p, alpha, n0_pair, thetas);
  };
  const double phi1 = -thetas[0];
  const double phi2 = -thetas[1];

  if (energy == 0.0) {
    // Every seed on the shell is the vacuum.
    result.best_params = shell_params(1.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    result.best_value = evaluate(result.best_params);
    result.energy_split = 1.0;
    result.converged = true;
    result.seed = two_mode_pure_covariance(result.best_params);
    return result;
  }

  // Coarse grid, t descending so ties keep the larger r1.
  double best_t = 1.0, best_mag = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = kGridPoints; i-- > 0;) {
    const double t = static_cast<double>(i) / (kGridPoints - 1);
    for (std::size_t k = 0; k < kGridPoints; ++k) {
      const double mag = (kPi / 2) * static_cast<double>(k) / (kGridPoints - 1);
      const double v = evaluate(shell_params(t, mag, 0.0, phi1, phi2, energy));
      if (v > best) {
        best = v;
        best_t = t;
        best_mag = mag;
      }
    }
  }

  auto decode = [&](std::span<const double> x) {
    return shell_params(reflect(x[0], 1.0), reflect(x[1], kPi / 2), x[2], x[3], x[4], energy);
  };
  const double steps[] = {1.0 / (kGridPoints - 1), kPi / 64, kPi / 16, kPi / 16, kPi / 16};
  NelderMeadOptions options;
  options.max_iterations = 200 * 5;
  const auto negated = [&](std::span<const double> x) { return -evaluate(decode(x)); };
  NelderMeadResult nm = nelder_mead(negated, {best_t, best_mag, 0.0, phi1, phi2}, steps, options);
  // Restart from the incumbent until a fresh simplex stops improving it.
  for (int restart = 0; restart < 8; ++restart) {
    NelderMeadResult again = nelder_mead(negated, nm.x, steps, options);
    const bool improved = again.value < nm.value - 1e-14 * std::abs(nm.value);
    if (again.value <= nm.value) nm = std::move(again);
    if (!improved) break;
  }

  double t = reflect(nm.x[0], 1.0);
  MeasurementParams p = shell_params(t, reflect(nm.x[1], kPi / 2), wrap_angle(nm.x[2]),
                                     wrap_angle(nm.x[3]), wrap_angle(nm.x[4]), energy);
  double value = evaluate(p);

  if (t < 0.5) {
    // Relabelling the modes maps (t, zeta, phi1, phi2) to
    // (1 - t, -conj(zeta), phi2, phi1).
    const MeasurementParams mirror = shell_params(1.0 - t, p.zeta_mag, wrap_angle(kPi - p.zeta_arg),
                                                  p.phi2, p.phi1, energy);
    const double mirror_value = evaluate(mirror);
    if (mirror_value >= value - 1e-12 * std::abs(value)) {
      p = mirror;
      value = mirror_value;
      t = 1.0 - t;
    }
  }

  result.best_params = p;
  result.energy_split = t;
  result.best_value = value;
  result.converged = nm.converged;
  result.seed = two_mode_pure_covariance(p);
  return result;
}

CovarianceMatrix separable_seed(std::span<const double> thetas,
                                std::span<const double> mode_energies) {
  if (thetas.size() != mode_energies.size() || thetas.empty()) {
    throw std::invalid_argument("separable_seed: size mismatch");
  }
  const auto dim = static_cast<Eigen::Index>(2 * thetas.size());
  CovarianceMatrix cov = CovarianceMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    // Squeeze the quadrature along which mode j's mean moves.
    const double u[] = {-std::sin(thetas[j]), std::cos(thetas[j])};
    const auto k = static_cast<Eigen::Index>(2 * j);
    cov.block(k, k, 2, 2) = squeezed_seed(u, mode_energies[j]).seed_covariance();
  }
  return cov;
}

OptimizationResult optimize_separable(std::span<const double> alphas,
                                      std::span<const double> n0s,
                                      std::span<const double> thetas, double energy,
                                      std::span<const double> v1) {
  require_energy(energy);
  const ProbeSpec spec{{alphas.begin(), alphas.end()}, {n0s.begin(), n0s.end()}};
  spec.validate();
  const std::size_t n = spec.n_modes();
  if (thetas.size() != n || v1.size() != n) {
    throw std::invalid_argument("optimize_separable: size mismatch");
  }
  require_unit(v1);

  OptimizationResult result;
  auto allocation = [&](std::span<const double> y) {
    double norm2 = 0.0;
    for (double x : y) norm2 += x * x;
    std::vector<double> e(n, energy / static_cast<double>(n));
    if (norm2 > 0.0) {
      for (std::size_t j = 0; j < n; ++j) e[j] = energy * y[j] * y[j] / norm2;
    }
    return e;
  };
  auto evaluate = [&](const std::vector<double>& e) {
    ++result.objective_evals;
    return linear_function_fi(spec, thetas, Ecgm(separable_seed(thetas, e)), v1);
  };

  std::vector<double> energies(n, energy / static_cast<double>(n));
  if (n > 1 && energy > 0.0) {
    const std::vector<double> steps(n, 0.25);
    NelderMeadOptions options;
    options.max_iterations = 200 * n;
    const NelderMeadResult nm = nelder_mead(
        [&](std::span<const double> y) { return -evaluate(allocation(y)); },
        std::vector<double>(n, 1.0), steps, options);
    energies = allocation(nm.x);
    result.converged = nm.converged;
  } else {
    result.converged = true;
  }

  result.seed = separable_seed(thetas, energies);
  result.best_value = evaluate(energies);
  result.squeezings.resize(n);
  for (std::size_t j = 0; j < n; ++j) result.squeezings[j] = std::asinh(std::sqrt(energies[j]));
  result.energy_split = energy > 0.0 ? energies[0] / energy : 1.0 / static_cast<double>(n);
  return result;
}

Eigen::MatrixXd noniso_sweep(std::span<const double> n1_grid, std::span<const double> n2_grid,
                             double alpha, double energy) {
  const double zero[] = {0.0, 0.0};
  Eigen::MatrixXd out(static_cast<Eigen::Index>(n1_grid.size()),
                      static_cast<Eigen::Index>(n2_grid.size()));
  for (std::size_t i = 0; i < n1_grid.size(); ++i) {
    for (std::size_t j = 0; j < n2_grid.size(); ++j) {
      const OptimizationResult r = optimize_two_mode(alpha, {n1_grid[i], n2_grid[j]}, zero, energy);
      if (!r.converged) {
        throw ConvergenceError("noniso_sweep: no convergence at cell (" + std::to_string(i) + ", " +
                               std::to_string(j) + "), N1=" + std::to_string(n1_grid[i]) +
                               ", N2=" + std::to_string(n2_grid[j]));
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r.best_value;
    }
  }
  return out;
}

}  // namespace gaussrx
