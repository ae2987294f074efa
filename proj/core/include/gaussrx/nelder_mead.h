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

#ifndef GAUSSRX_NELDER_MEAD_H
#define GAUSSRX_NELDER_MEAD_H

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gaussrx {

struct NelderMeadOptions {
  // Converged once every vertex lies within this distance (max-norm) of the best.
  double x_tol = 1e-9;
  // Also converged once the spread of vertex values is below f_tol * (1 + |f_best|).
  double f_tol = 1e-15;
  std::size_t max_iterations = 1000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Minimizes f from x0 with an axis-aligned initial simplex of the given steps.
// Standard coefficients (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, std::span<const double> steps,
                             const NelderMeadOptions& options = {});

}  // namespace gaussrx

#endif  // GAUSSRX_NELDER_MEAD_H
