// Copyright 2026 The phasedamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "phasedamp/p_function.hpp"

namespace phasedamp {

/// K(alpha, beta) = exp(-|alpha - decay beta|^2 / width) / (pi width).
/// decay = exp(-gamma t), width = nbar_t gives the thermal-bath propagator;
/// decay = 1, width = 1 turns P into Q.
struct SmoothingKernel {
  double decay = 1.0;
  double width = 1.0;
};

enum class SmoothingMethod {
  /// Gaussian-polynomial inputs are integrated in closed form.
  ClosedForm,
  /// Gaussian-polynomial inputs go through adaptive quadrature.
  Quadrature,
};

struct SmoothedValue {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// integral d^2beta P(beta) K(alpha, beta).
///
/// Delta and delta-derivative inputs are always exact: derivatives are moved
/// onto the kernel by parts, giving Hermite polynomials in
/// (alpha - decay center)/sqrt(width). U-series inputs use adaptive
/// quadrature and sampled grids use the trapezoid rule. Closed-form sums
/// that fall below their own rounding floor are returned as exactly zero,
/// with the floor reported as the error estimate. Throws
/// ConvergenceError when the quadrature error estimate exceeds `tolerance`.
SmoothedValue smooth_p(const PFunctionDescriptor& p, Complex alpha, SmoothingKernel kernel, SmoothingMethod method,
                       double tolerance = 1e-9);

}  // namespace phasedamp
