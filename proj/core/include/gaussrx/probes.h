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

#ifndef GAUSSRX_PROBES_H
#define GAUSSRX_PROBES_H

#include <cstddef>
#include <span>
#include <vector>

#include "gaussrx/symplectic.h"

namespace gaussrx {

// Product of displaced thermal states, one per sensor mode. Amplitudes are
// real; a complex amplitude is the same probe after a phase imprint.
struct ProbeSpec {
  std::vector<double> alphas;
  std::vector<double> thermal_occupations;

  std::size_t n_modes() const { return alphas.size(); }

  // Throws std::invalid_argument on length mismatch, empty spec, negative
  // or non-finite occupations, or non-finite amplitudes.
  void validate() const;

  static ProbeSpec uniform(std::size_t n_modes, double alpha, double n0);
};

struct GaussianState {
  PhaseSpaceVector mean;
  CovarianceMatrix cov;

  std::size_t n_modes() const { return static_cast<std::size_t>(mean.size() / 2); }
};

// Loss (transmissivity eta) followed by added thermal noise.
struct ChannelSpec {
  double eta = 1.0;
  double n_channel = 0.0;
};

// Mean blocks (sqrt(2) alpha_j, 0); covariance (N_j + 1/2) I_2 per mode.
GaussianState probe_state(const ProbeSpec& spec);

// Applies the phase shifts: mean -> V^T mean, cov -> V^T cov V with
// V = phase_rotation(thetas).
GaussianState imprint_phases(const GaussianState& state, std::span<const double> thetas);

// Convenience: imprint_phases(probe_state(spec), thetas).
GaussianState received_state(const ProbeSpec& spec, std::span<const double> thetas);

// Rescales amplitudes by eta and adds n_channel to every occupation.
ProbeSpec apply_channel(const ProbeSpec& spec, const ChannelSpec& channel);

// d mean / d theta_j for each mode j, evaluated at thetas.
std::vector<PhaseSpaceVector> mean_derivatives(const ProbeSpec& spec,
                                               std::span<const double> thetas);

// (v . grad_theta) mean. Its squared norm is 2 sum_j v_j^2 alpha_j^2.
// Throws unless |v| = 1 within 1e-12.
PhaseSpaceVector phase_derivative_of_mean(const ProbeSpec& spec, std::span<const double> thetas,
                                          std::span<const double> direction);

// Throws std::invalid_argument unless |v| = 1 within tol.
void require_unit(std::span<const double> v, double tol = 1e-12);

}  // namespace gaussrx

#endif  // GAUSSRX_PROBES_H
