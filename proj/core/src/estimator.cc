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

#include "gaussrx/estimator.h"

#include <cmath>
#include <numbers>
#include <string>

#include "gaussrx/fisher.h"
#include "gaussrx/nelder_mead.h"
#include "gaussrx/optimizer.h"
#include "gaussrx/random.h"

namespace gaussrx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSearchHalfWidth = kPi / 4;
constexpr double kSearchTol = 1e-10;

// The Gaussian log-likelihood depends on the outcomes only through their
// count, sample mean and scatter matrix.
struct SufficientStats {
  double count = 0.0;
  Eigen::VectorXd mean;
  Eigen::MatrixXd scatter;

  explicit SufficientStats(const Eigen::MatrixXd& outcomes)
      : count(static_cast<double>(outcomes.cols())), mean(outcomes.rowwise().mean()) {
    const Eigen::MatrixXd centered = outcomes.colwise() - mean;
    scatter = centered * centered.transpose();
  }

  double log_likelihood(const GaussianState& state, const Ecgm& m) const {
    const CovarianceMatrix cov = outcome_covariance(state, m);
    if (mean.size() != cov.rows()) {
      throw std::invalid_argument("log_likelihood: outcome dimension mismatch");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
      throw std::domain_error("log_likelihood: singular outcome covariance");
    }
    const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    const double dim = static_cast<double>(cov.rows());
    const double offset = llt.matrixL().solve(mean - state.mean).squaredNorm();
    const double spread = llt.solve(scatter).trace();
    return -0.5 * (count * (dim * std::log(2.0 * kPi) + log_det) + spread + count * offset);
  }
};

Eigen::MatrixXd to_matrix(std::span<const PhaseSpaceVector> outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("at least one outcome required");
  Eigen::MatrixXd out(outcomes.front().size(), static_cast<Eigen::Index>(outcomes.size()));
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = outcomes[k];
  }
  return out;
}

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  return w <= -kPi ? w + 2.0 * kPi : w;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

}  // namespace

double log_likelihood(std::span<const double> thetas, const Eigen::MatrixXd& outcomes,
                      const ProbeSpec& spec, const Ecgm& m) {
  if (outcomes.cols() == 0) throw std::invalid_argument("at least one outcome required");
  return SufficientStats(outcomes).log_likelihood(received_state(spec, thetas), m);
}

double log_likelihood(std::span<const double> thetas, std::span<const PhaseSpaceVector> outcomes,
                      const ProbeSpec& spec, const Ecgm& m) {
  return log_likelihood(thetas, to_matrix(outcomes), spec, m);
}

double mle_estimate(const Eigen::MatrixXd& outcomes, const ProbeSpec& spec, const Ecgm& m,
                    std::span<const double> v1, std::span<const double> theta_init) {
  if (v1.size() != spec.n_modes() || theta_init.size() != spec.n_modes()) {
    throw std::invalid_argument("mle_estimate: size mismatch");
  }
  require_unit(v1);
  const SufficientStats stats(outcomes);
  std::vector<double> thetas(theta_init.begin(), theta_init.end());
  auto ll = [&](double s) {
    for (std::size_t j = 0; j < thetas.size(); ++j) thetas[j] = theta_init[j] + s * v1[j];
    return stats.log_likelihood(received_state(spec, thetas), m);
  };

  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = -kSearchHalfWidth, b = kSearchHalfWidth;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = ll(c), fd = ll(d);
  while (b - a > kSearchTol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = ll(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = ll(d);
    }
  }
  double s = 0.5 * (a + b);
  if (kSearchHalfWidth - std::abs(s) < 1e-6) {
    throw ConvergenceError("mle_estimate: likelihood maximum on the search boundary");
  }

  // One parabolic step through s - h, s, s + h.
  const double h = 1e-4;
  const double f0 = ll(s), fm = ll(s - h), fp = ll(s + h);
  const double curvature = fp - 2.0 * f0 + fm;
  if (curvature < 0.0) {
    const double vertex = s - 0.5 * h * (fp - fm) / curvature;
    if (std::abs(vertex - s) < h && ll(vertex) >= f0) s = vertex;
  }
  return wrap_angle(dot(v1, theta_init) + s);
}

double mle_estimate(std::span<const PhaseSpaceVector> outcomes, const ProbeSpec& spec,
                    const Ecgm& m, std::span<const double> v1,
                    std::span<const double> theta_init) {
  return mle_estimate(to_matrix(outcomes), spec, m, v1, theta_init);
}

double mle_estimate_full(const Eigen::MatrixXd& outcomes, const ProbeSpec& spec, const Ecgm& m,
                         std::span<const double> v1, std::span<const double> theta_init) {
  if (v1.size() != spec.n_modes() || theta_init.size() != spec.n_modes()) {
    throw std::invalid_argument("mle_estimate_full: size mismatch");
  }
  require_unit(v1);
  const SufficientStats stats(outcomes);
  const std::vector<double> steps(theta_init.size(), 0.01);
  NelderMeadOptions options;
  options.x_tol = kSearchTol;
  options.f_tol = 0.0;
  options.max_iterations = 400 * theta_init.size();
  const NelderMeadResult nm = nelder_mead(
      [&](std::span<const double> th) { return -stats.log_likelihood(received_state(spec, th), m); },
      {theta_init.begin(), theta_init.end()}, steps, options);
  if (!nm.converged) {
    throw ConvergenceError("mle_estimate_full: simplex search did not converge");
  }
  return wrap_angle(dot(v1, nm.x));
}

McReport crb_experiment(const ProbeSpec& spec, std::span<const double> thetas_true,
                        const Ecgm& m, std::span<const double> v1, std::size_t m_samples,
                        std::size_t repetitions, std::uint64_t seed, const CrbOptions& options) {
  if (m_samples < 1000) throw std::invalid_argument("crb_experiment: m_samples must be >= 1000");
  if (repetitions < 100) throw std::invalid_argument("crb_experiment: repetitions must be >= 100");

  McReport report;
  report.m_samples = m_samples;
  report.repetitions = repetitions;
  report.seed = seed;
  report.truth = wrap_angle(dot(v1, thetas_true));
  report.f_tilde_11 = linear_function_fi(spec, thetas_true, m, v1);
  report.crb = 1.0 / (static_cast<double>(m_samples) * report.f_tilde_11);

  const GaussianState state = received_state(spec, thetas_true);
  std::vector<double> errors(repetitions);
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    const Eigen::MatrixXd outcomes =
        sample_outcome_matrix(state, m, m_samples, derive_seed(seed, rep));
    double estimate = 0.0;
    try {
      estimate = options.full_vector ? mle_estimate_full(outcomes, spec, m, v1, thetas_true)
                                     : mle_estimate(outcomes, spec, m, v1, thetas_true);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("crb_experiment: repetition " + std::to_string(rep) + ": " + e.what());
    }
    errors[rep] = wrap_angle(estimate - report.truth);
  }

  const double n = static_cast<double>(repetitions);
  double mean = 0.0;
  for (double e : errors) mean += e;
  mean /= n;
  double var = 0.0;
  for (double e : errors) var += (e - mean) * (e - mean);
  var /= (n - 1.0);

  report.mean_estimate = wrap_angle(report.truth + mean);
  report.mean_standard_error = std::sqrt(var / n);
  report.empirical_variance = var;
  report.ratio = var / report.crb;
  return report;
}

}  // namespace gaussrx
