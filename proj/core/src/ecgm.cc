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

#include "gaussrx/ecgm.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gaussrx/random.h"

namespace gaussrx {

namespace {

void check_dims(const GaussianState& state, const Ecgm& m) {
  if (state.mean.size() != state.cov.rows() || state.cov.rows() != m.seed_covariance().rows()) {
    throw std::invalid_argument("probe state and measurement have different mode counts");
  }
}

}  // namespace

Ecgm::Ecgm(CovarianceMatrix cov_s) : cov_s_(std::move(cov_s)) {
  if (!is_valid_covariance(cov_s_)) {
    throw std::invalid_argument("Ecgm: seed covariance violates the uncertainty principle");
  }
}

double energy(const Ecgm& m) { return covariance_energy(m.seed_covariance()); }

Ecgm heterodyne(std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("heterodyne: n_modes must be positive");
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  return Ecgm(0.5 * CovarianceMatrix::Identity(dim, dim));
}

Ecgm squeezed_seed(std::span<const double> direction, double energy) {
  if (direction.empty() || direction.size() % 2 != 0) {
    throw std::invalid_argument("squeezed_seed: direction must have even, nonzero length");
  }
  if (!(energy >= 0.0) || !std::isfinite(energy)) {
    throw std::invalid_argument("squeezed_seed: energy must be finite and >= 0");
  }
  require_unit(direction, 1e-10);
  const auto dim = static_cast<Eigen::Index>(direction.size());
  const Eigen::VectorXd u = Eigen::Map<const Eigen::VectorXd>(direction.data(), dim);
  const Eigen::VectorXd w = symplectic_form(direction.size() / 2) * u;
  const double r = std::asinh(std::sqrt(energy));
  // e^{-2r} - 1 and e^{2r} - 1 without cancellation for tiny r.
  const double shrink = std::expm1(-2.0 * r);
  const double stretch = std::expm1(2.0 * r);
  CovarianceMatrix cov = CovarianceMatrix::Identity(dim, dim);
  cov += shrink * u * u.transpose() + stretch * w * w.transpose();
  cov *= 0.5;
  return Ecgm(0.5 * (cov + cov.transpose()));
}

Ecgm homodyne_limit(std::span<const double> direction, double energy) {
  return squeezed_seed(direction, energy);
}

Ecgm ecgm_from_params(const MeasurementParams& params) {
  return Ecgm(two_mode_pure_covariance(params));
}

CovarianceMatrix outcome_covariance(const GaussianState& state, const Ecgm& m) {
  check_dims(state, m);
  return state.cov + m.seed_covariance();
}

double log_outcome_density(const GaussianState& state, const Ecgm& m, const PhaseSpaceVector& y) {
  const CovarianceMatrix cov = outcome_covariance(state, m);
  if (y.size() != cov.rows()) {
    throw std::invalid_argument("outcome_density: outcome dimension mismatch");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("outcome_density: singular outcome covariance");
  }
  const Eigen::VectorXd diff = y - state.mean;
  const Eigen::VectorXd white = llt.matrixL().solve(diff);
  const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  const double dim = static_cast<double>(cov.rows());
  return -0.5 * white.squaredNorm() - 0.5 * log_det - 0.5 * dim * std::log(2.0 * std::numbers::pi);
}

double outcome_density(const GaussianState& state, const Ecgm& m, const PhaseSpaceVector& y) {
  return std::exp(log_outcome_density(state, m, y));
}

PhaseSpaceVector outcome_from_weyl(const PhaseSpaceVector& z) {
  return symplectic_form(static_cast<std::size_t>(z.size() / 2)).transpose() * z;
}

PhaseSpaceVector weyl_from_outcome(const PhaseSpaceVector& y) {
  return symplectic_form(static_cast<std::size_t>(y.size() / 2)) * y;
}

Eigen::MatrixXd principal_sqrt(const Eigen::MatrixXd& spd) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(spd);
  if (solver.info() != Eigen::Success || solver.eigenvalues().minCoeff() <= 0.0) {
    throw std::domain_error("principal_sqrt: matrix is not positive definite");
  }
  return solver.eigenvectors() * solver.eigenvalues().cwiseSqrt().asDiagonal() *
         solver.eigenvectors().transpose();
}

Eigen::MatrixXd sample_outcome_matrix(const GaussianState& state, const Ecgm& m,
                                      std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("sample_outcomes: count must be positive");
  const Eigen::MatrixXd root = principal_sqrt(outcome_covariance(state, m));
  const Eigen::Index dim = root.rows();
  Rng rng(seed);
  Eigen::MatrixXd g(dim, static_cast<Eigen::Index>(count));
  for (Eigen::Index c = 0; c < g.cols(); ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) g(r, c) = rng.normal();
  }
  Eigen::MatrixXd out = root * g;
  out.colwise() += state.mean;
  return out;
}

std::vector<PhaseSpaceVector> sample_outcomes(const GaussianState& state, const Ecgm& m,
                                              std::size_t count, std::uint64_t seed) {
  const Eigen::MatrixXd draws = sample_outcome_matrix(state, m, count, seed);
  std::vector<PhaseSpaceVector> out;
  out.reserve(count);
  for (Eigen::Index c = 0; c < draws.cols(); ++c) out.emplace_back(draws.col(c));
  return out;
}

}  // namespace gaussrx
