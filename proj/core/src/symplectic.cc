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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace gaussrx {

namespace {

void require_finite(std::span<const double> xs, const char* what) {
  for (double x : xs) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

std::size_t mode_count(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw std::invalid_argument("phase-space matrix must be square with even, nonzero size");
  }
  return static_cast<std::size_t>(m.rows() / 2);
}

}  // namespace

SymplecticMatrix symplectic_form(std::size_t n_modes) {
  if (n_modes == 0) {
    throw std::invalid_argument("symplectic_form: n_modes must be positive");
  }
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  SymplecticMatrix delta = SymplecticMatrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; k += 2) {
    delta(k, k + 1) = 1.0;
    delta(k + 1, k) = -1.0;
  }
  return delta;
}

SymplecticMatrix phase_rotation(std::span<const double> thetas) {
  if (thetas.empty()) {
    throw std::invalid_argument("phase_rotation: need at least one angle");
  }
  require_finite(thetas, "phase_rotation");
  const auto dim = static_cast<Eigen::Index>(2 * thetas.size());
  SymplecticMatrix v = SymplecticMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const auto k = static_cast<Eigen::Index>(2 * j);
    const double c = std::cos(thetas[j]);
    const double s = std::sin(thetas[j]);
    v(k, k) = c;
    v(k, k + 1) = s;
    v(k + 1, k) = -s;
    v(k + 1, k + 1) = c;
  }
  return v;
}

SymplecticMatrix squeezer(std::span<const double> rs) {
  if (rs.empty()) {
    throw std::invalid_argument("squeezer: need at least one mode");
  }
  require_finite(rs, "squeezer");
  const auto dim = static_cast<Eigen::Index>(2 * rs.size());
  SymplecticMatrix s = SymplecticMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < rs.size(); ++j) {
    const auto k = static_cast<Eigen::Index>(2 * j);
    s(k, k) = std::exp(rs[j]);
    s(k + 1, k + 1) = std::exp(-rs[j]);
  }
  return s;
}

CovarianceMatrix squeezer_covariance(std::span<const double> rs) {
  const SymplecticMatrix s = squeezer(rs);
  return 0.5 * s * s.transpose();
}

SymplecticMatrix beamsplitter(double zeta_mag, double zeta_arg) {
  if (!std::isfinite(zeta_mag) || !std::isfinite(zeta_arg)) {
    throw std::invalid_argument("beamsplitter: non-finite angle");
  }
  if (zeta_mag < 0.0 || zeta_mag > std::numbers::pi / 2) {
    throw std::invalid_argument("beamsplitter: |zeta| must lie in [0, pi/2]");
  }
  const double c = std::cos(zeta_mag);
  const double s = std::sin(zeta_mag);
  const double sc = s * std::cos(zeta_arg);
  const double ss = s * std::sin(zeta_arg);
  SymplecticMatrix b(4, 4);
  // clang-format off
  b <<   c,   0,  sc, -ss,
         0,   c,  ss,  sc,
       -sc, -ss,   c,   0,
        ss, -sc,   0,   c;
  // clang-format on
  return b;
}

SymplecticMatrix two_mode_symplectic(const MeasurementParams& params) {
  const double phis[] = {params.phi1, params.phi2};
  const double rs[] = {params.r1, params.r2};
  return phase_rotation(phis) * beamsplitter(params.zeta_mag, params.zeta_arg) * squeezer(rs);
}

CovarianceMatrix two_mode_pure_covariance(const MeasurementParams& params) {
  const SymplecticMatrix m = two_mode_symplectic(params);
  CovarianceMatrix cov = 0.5 * m * m.transpose();
  return 0.5 * (cov + cov.transpose());
}

double uncertainty_margin(const CovarianceMatrix& cov) {
  const std::size_t n = mode_count(cov);
  const Eigen::MatrixXcd h =
      cov.cast<std::complex<double>>() +
      std::complex<double>(0.0, 0.5) * symplectic_form(n).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_valid_covariance(const CovarianceMatrix& cov) {
  if (cov.rows() != cov.cols() || cov.rows() == 0 || cov.rows() % 2 != 0) return false;
  if (!cov.allFinite()) return false;
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale) return false;
  return uncertainty_margin(cov) >= -kSymplecticTol * scale;
}

bool is_symplectic(const SymplecticMatrix& t) {
  if (t.rows() != t.cols() || t.rows() == 0 || t.rows() % 2 != 0) return false;
  const SymplecticMatrix delta = symplectic_form(static_cast<std::size_t>(t.rows() / 2));
  const double scale = std::max(1.0, t.cwiseAbs().maxCoeff());
  return (t.transpose() * delta * t - delta).cwiseAbs().maxCoeff() < kSymplecticTol * scale * scale;
}

Eigen::VectorXd symplectic_eigenvalues(const CovarianceMatrix& cov) {
  const std::size_t n = mode_count(cov);
  // The spectrum of i*Delta*cov is {+-nu_k}.
  Eigen::EigenSolver<Eigen::MatrixXd> solver(symplectic_form(n) * cov, false);
  std::vector<double> mags;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    mags.push_back(std::abs(solver.eigenvalues()[k].imag()));
  }
  std::sort(mags.begin(), mags.end());
  Eigen::VectorXd nu(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    nu[static_cast<Eigen::Index>(k)] = 0.5 * (mags[2 * k] + mags[2 * k + 1]);
  }
  return nu;
}

double covariance_energy(const CovarianceMatrix& cov) {
  const std::size_t n = mode_count(cov);
  return 0.5 * cov.trace() - 0.5 * static_cast<double>(n);
}

}  // namespace gaussrx
