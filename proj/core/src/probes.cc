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

#include "gaussrx/probes.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gaussrx {

void ProbeSpec::validate() const {
  if (alphas.empty()) {
    throw std::invalid_argument("ProbeSpec: at least one mode required");
  }
  if (alphas.size() != thermal_occupations.size()) {
    throw std::invalid_argument("ProbeSpec: alphas and thermal_occupations differ in length");
  }
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    if (!std::isfinite(alphas[j])) {
      throw std::invalid_argument("ProbeSpec: non-finite amplitude in mode " + std::to_string(j));
    }
    const double n = thermal_occupations[j];
    if (!std::isfinite(n) || n < 0.0) {
      throw std::invalid_argument("ProbeSpec: thermal occupation must be finite and >= 0 (mode " +
                                  std::to_string(j) + ")");
    }
  }
}

ProbeSpec ProbeSpec::uniform(std::size_t n_modes, double alpha, double n0) {
  ProbeSpec spec{std::vector<double>(n_modes, alpha), std::vector<double>(n_modes, n0)};
  spec.validate();
  return spec;
}

GaussianState probe_state(const ProbeSpec& spec) {
  spec.validate();
  const auto dim = static_cast<Eigen::Index>(2 * spec.n_modes());
  GaussianState state{PhaseSpaceVector::Zero(dim), CovarianceMatrix::Zero(dim, dim)};
  for (std::size_t j = 0; j < spec.n_modes(); ++j) {
    const auto k = static_cast<Eigen::Index>(2 * j);
    state.mean[k] = std::numbers::sqrt2 * spec.alphas[j];
    state.cov(k, k) = spec.thermal_occupations[j] + 0.5;
    state.cov(k + 1, k + 1) = spec.thermal_occupations[j] + 0.5;
  }
  return state;
}

GaussianState imprint_phases(const GaussianState& state, std::span<const double> thetas) {
  if (thetas.size() != state.n_modes() || state.mean.size() != state.cov.rows()) {
    throw std::invalid_argument("imprint_phases: angle count does not match mode count");
  }
  const SymplecticMatrix v = phase_rotation(thetas);
  return {v.transpose() * state.mean, v.transpose() * state.cov * v};
}

GaussianState received_state(const ProbeSpec& spec, std::span<const double> thetas) {
  return imprint_phases(probe_state(spec), thetas);
}

ProbeSpec apply_channel(const ProbeSpec& spec, const ChannelSpec& channel) {
  spec.validate();
  if (!(channel.eta >= 0.0 && channel.eta <= 1.0)) {
    throw std::invalid_argument("apply_channel: eta must lie in [0, 1]");
  }
  if (!(channel.n_channel >= 0.0) || !std::isfinite(channel.n_channel)) {
    throw std::invalid_argument("apply_channel: n_channel must be finite and >= 0");
  }
  ProbeSpec out = spec;
  for (std::size_t j = 0; j < out.n_modes(); ++j) {
    out.alphas[j] *= channel.eta;
    out.thermal_occupations[j] += channel.n_channel;
  }
  return out;
}

std::vector<PhaseSpaceVector> mean_derivatives(const ProbeSpec& spec,
                                               std::span<const double> thetas) {
  spec.validate();
  if (thetas.size() != spec.n_modes()) {
    throw std::invalid_argument("mean_derivatives: angle count does not match mode count");
  }
  const auto dim = static_cast<Eigen::Index>(2 * spec.n_modes());
  std::vector<PhaseSpaceVector> out;
  out.reserve(spec.n_modes());
  for (std::size_t j = 0; j < spec.n_modes(); ++j) {
    // Mode j mean is sqrt(2) alpha (cos t, sin t).
    PhaseSpaceVector d = PhaseSpaceVector::Zero(dim);
    const auto k = static_cast<Eigen::Index>(2 * j);
    const double a = std::numbers::sqrt2 * spec.alphas[j];
    d[k] = -a * std::sin(thetas[j]);
    d[k + 1] = a * std::cos(thetas[j]);
    out.push_back(std::move(d));
  }
  return out;
}

void require_unit(std::span<const double> v, double tol) {
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (!(std::abs(std::sqrt(norm2) - 1.0) <= tol)) {
    throw std::invalid_argument("direction vector must have unit norm");
  }
}

PhaseSpaceVector phase_derivative_of_mean(const ProbeSpec& spec, std::span<const double> thetas,
                                          std::span<const double> direction) {
  if (direction.size() != spec.n_modes()) {
    throw std::invalid_argument("phase_derivative_of_mean: direction length mismatch");
  }
  require_unit(direction);
  const auto derivs = mean_derivatives(spec, thetas);
  PhaseSpaceVector out = PhaseSpaceVector::Zero(derivs.front().size());
  for (std::size_t j = 0; j < derivs.size(); ++j) out += direction[j] * derivs[j];
  return out;
}

}  // namespace gaussrx
