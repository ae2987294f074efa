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

#include "gaussrx/fisher.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace gaussrx {

namespace {

Eigen::LLT<Eigen::MatrixXd> factor(const CovarianceMatrix& cov) {
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("Fisher information: outcome covariance is singular");
  }
  return llt;
}

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0) || std::isnan(x)) {
    throw std::invalid_argument(std::string(what) + " must be >= 0");
  }
}

}  // namespace

GaussianFisher gaussian_fisher(std::span<const PhaseSpaceVector> mean_derivs,
                               std::span<const Eigen::MatrixXd> cov_derivs,
                               const CovarianceMatrix& outcome_cov) {
  if (!cov_derivs.empty() && cov_derivs.size() != mean_derivs.size()) {
    throw std::invalid_argument("gaussian_fisher: derivative lists differ in length");
  }
  const auto llt = factor(outcome_cov);
  const auto n = static_cast<Eigen::Index>(mean_derivs.size());
  Eigen::MatrixXd whitened(outcome_cov.rows(), n);
  for (Eigen::Index i = 0; i < n; ++i) {
    whitened.col(i) = llt.matrixL().solve(mean_derivs[static_cast<std::size_t>(i)]);
  }
  GaussianFisher out{whitened.transpose() * whitened, false};

  if (!cov_derivs.empty()) {
    Eigen::VectorXd traces(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::MatrixXd& d = cov_derivs[static_cast<std::size_t>(i)];
      traces[i] = llt.solve(d).trace();  // tr(C^{-1} dC) = tr(dC C^{-1})
    }
    if (traces.cwiseAbs().maxCoeff() > 0.0) {
      out.information += 0.25 * traces * traces.transpose();
      out.covariance_term_used = true;
    }
  }
  out.information = 0.5 * (out.information + out.information.transpose()).eval();
  return out;
}

Eigen::MatrixXd fisher_matrix(const ProbeSpec& spec, std::span<const double> thetas,
                              const Ecgm& m) {
  const GaussianState state = received_state(spec, thetas);
  const auto derivs = mean_derivatives(spec, thetas);
  return gaussian_fisher(derivs, {}, outcome_covariance(state, m)).information;
}

Eigen::MatrixXd rotate_fisher(const Eigen::MatrixXd& fisher, const Eigen::MatrixXd& basis) {
  if (basis.rows() != fisher.rows() || basis.cols() != fisher.cols()) {
    throw std::invalid_argument("rotate_fisher: basis shape does not match");
  }
  const Eigen::MatrixXd gram = basis.transpose() * basis;
  if ((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("rotate_fisher: basis is not orthonormal");
  }
  return basis.transpose() * fisher * basis;
}

double linear_function_fi(const ProbeSpec& spec, std::span<const double> thetas, const Ecgm& m,
                          std::span<const double> v1) {
  const GaussianState state = received_state(spec, thetas);
  const PhaseSpaceVector d = phase_derivative_of_mean(spec, thetas, v1);
  const auto llt = factor(outcome_covariance(state, m));
  return llt.matrixL().solve(d).squaredNorm();
}

Eigen::MatrixXd basis_with_first(std::span<const double> v1) {
  require_unit(v1, 1e-10);
  const auto n = static_cast<Eigen::Index>(v1.size());
  const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(v1.data(), n);
  Eigen::VectorXd w = v;
  w[0] -= 1.0;
  const double w2 = w.squaredNorm();
  if (w2 < 1e-24) return Eigen::MatrixXd::Identity(n, n);
  // Householder reflection mapping e_1 to v.
  return Eigen::MatrixXd::Identity(n, n) - (2.0 / w2) * w * w.transpose();
}

std::vector<double> phase_difference_direction() { return balanced_direction(2); }

std::vector<double> balanced_direction(std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("balanced_direction: n_modes must be positive");
  const double c = 1.0 / std::sqrt(static_cast<double>(n_modes));
  std::vector<double> v(n_modes);
  for (std::size_t j = 0; j < n_modes; ++j) v[j] = (j % 2 == 0) ? c : -c;
  return v;
}

double qfi_linear_function(const ProbeSpec& spec, std::span<const double> v1) {
  spec.validate();
  if (v1.size() != spec.n_modes()) {
    throw std::invalid_argument("qfi_linear_function: direction length mismatch");
  }
  require_unit(v1);
  double q = 0.0;
  for (std::size_t j = 0; j < spec.n_modes(); ++j) {
    const double a = spec.alphas[j];
    q += v1[j] * v1[j] * 2.0 * a * a / (spec.thermal_occupations[j] + 0.5);
  }
  return q;
}

double qfi_phase_difference(const ProbeSpec& spec) {
  if (spec.n_modes() != 2) {
    throw std::invalid_argument("qfi_phase_difference: two-mode probe required");
  }
  return qfi_linear_function(spec, phase_difference_direction());
}

std::vector<SldTerm> sld_coefficients(const ProbeSpec& spec, std::span<const double> thetas) {
  spec.validate();
  if (thetas.size() != spec.n_modes()) {
    throw std::invalid_argument("sld_coefficients: angle count does not match mode count");
  }
  std::vector<SldTerm> out;
  for (std::size_t j = 0; j < spec.n_modes(); ++j) {
    out.push_back({spec.alphas[j] / (spec.thermal_occupations[j] + 0.5), thetas[j]});
  }
  return out;
}

PhaseSpaceVector sld_quadrature_vector(const ProbeSpec& spec, std::span<const double> thetas,
                                       std::span<const double> v) {
  const GaussianState state = received_state(spec, thetas);
  const PhaseSpaceVector d = phase_derivative_of_mean(spec, thetas, v);
  return state.cov.llt().solve(d);
}

double isothermal_denominator(double n0, double energy) {
  require_nonnegative(n0, "n0");
  require_nonnegative(energy, "energy");
  if (energy == 0.0) return n0 + 1.0;
  if (std::isinf(energy)) return n0 + 0.5;
  // E - sqrt(E^2 + E) = -1 / (1 + sqrt(1 + 1/E))
  return n0 + 1.0 - 1.0 / (1.0 + std::sqrt(1.0 + 1.0 / energy));
}

double gfi_closed_form(double alpha, double n0, double energy) {
  return 2.0 * alpha * alpha / isothermal_denominator(n0, energy);
}

double separable_fi_balanced(double alpha, double n0, double energy, std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("separable_fi_balanced: n_modes must be positive");
  require_nonnegative(energy, "energy");
  return 2.0 * alpha * alpha / isothermal_denominator(n0, energy / static_cast<double>(n_modes));
}

double separable_fi_unbalanced(double alpha, double n0, double energy, double v11_sq) {
  if (!(v11_sq > 0.0 && v11_sq <= 1.0)) {
    throw std::invalid_argument("separable_fi_unbalanced: v11_sq must lie in (0, 1]");
  }
  const double squeezed = v11_sq / isothermal_denominator(n0, energy);
  const double rest = (1.0 - v11_sq) / (n0 + 1.0);
  return 2.0 * alpha * alpha * (squeezed + rest);
}

double entanglement_gain(double alpha, double n0, double energy, const SeparableMode& mode) {
  const double separable = std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Balanced>) {
          return separable_fi_balanced(alpha, n0, energy, m.n_modes);
        } else {
          return separable_fi_unbalanced(alpha, n0, energy, m.v11_sq);
        }
      },
      mode);
  return gfi_closed_form(alpha, n0, energy) / separable;
}

double bosonic_entropy(double x) {
  if (x < 0.0) throw std::invalid_argument("bosonic_entropy: occupation must be >= 0");
  if (x == 0.0) return 0.0;
  return (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

double gaussian_entropy(const CovarianceMatrix& cov) {
  const Eigen::VectorXd nu = symplectic_eigenvalues(cov);
  double h = 0.0;
  for (Eigen::Index k = 0; k < nu.size(); ++k) {
    h += bosonic_entropy(std::max(0.0, nu[k] - 0.5));
  }
  return h;
}

double entanglement_entropy_of_optimal_seed(double energy) {
  require_nonnegative(energy, "energy");
  return bosonic_entropy(0.5 * (std::sqrt(energy + 1.0) - 1.0));
}

MeasurementParams optimal_isothermal_params(double energy) {
  require_nonnegative(energy, "energy");
  MeasurementParams p;
  p.r1 = std::asinh(std::sqrt(energy));
  p.zeta_mag = std::numbers::pi / 4;
  return p;
}

MeasurementParams counter_rotate(const MeasurementParams& params, std::span<const double> thetas) {
  if (thetas.size() != 2) throw std::invalid_argument("counter_rotate: two angles required");
  MeasurementParams out = params;
  out.phi1 -= thetas[0];
  out.phi2 -= thetas[1];
  return out;
}

double fir(std::span<const double> thetas_true, double alpha, double n0, double energy) {
  if (alpha == 0.0) throw std::invalid_argument("fir: alpha must be nonzero");
  const ProbeSpec spec = ProbeSpec::uniform(2, alpha, n0);
  const Ecgm m = ecgm_from_params(optimal_isothermal_params(energy));
  const double achieved = linear_function_fi(spec, thetas_true, m, phase_difference_direction());
  return achieved / (4.0 * alpha * alpha / (2.0 * n0 + 1.0));
}

FisherReport fisher_report(const ProbeSpec& spec, std::span<const double> thetas, const Ecgm& m,
                           std::span<const double> v1) {
  FisherReport report;
  report.fisher = fisher_matrix(spec, thetas, m);
  report.rotated = rotate_fisher(report.fisher, basis_with_first(v1));
  report.f_tilde_11 = report.rotated(0, 0);
  report.qfi = qfi_linear_function(spec, v1);
  report.notes = {
      "fisher: mean-derivative term; covariance term identically zero for displaced thermal probes",
      "rotated: J^T F J with J an orthonormal completion of v1",
      "qfi: sum_j v_j^2 2 alpha_j^2 / (N_j + 1/2)",
  };
  return report;
}

}  // namespace gaussrx
