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

#include <Eigen/Dense>

#include "phasedamp/phase_core.hpp"

namespace phasedamp {

using FockMatrix = Eigen::MatrixXcd;
using FockVector = Eigen::VectorXcd;

/// Density matrix <m|rho|n> on the truncated basis |0>..|cutoff-1>.
class FockDensityMatrix {
 public:
  /// Validates squareness, cutoff >= 2 and elementwise Hermiticity (1e-12).
  FockDensityMatrix(FockMatrix elements, double trace_deficit);

  static FockDensityMatrix from_pure(const FockVector& psi);
  static FockDensityMatrix number_state(int k, int cutoff);
  static FockDensityMatrix vacuum(int cutoff) { return number_state(0, cutoff); }

  int cutoff() const noexcept { return static_cast<int>(elements_.rows()); }
  const FockMatrix& elements() const noexcept { return elements_; }
  double trace_deficit() const noexcept { return trace_deficit_; }

  double trace() const { return elements_.trace().real(); }
  double population(int k) const { return elements_(k, k).real(); }
  double min_eigenvalue() const;

 private:
  FockMatrix elements_;
  double trace_deficit_;
};

/// Coherent-state amplitudes exp(-|beta|^2/2) beta^n / sqrt(n!) for n < size.
FockVector coherent_amplitudes(Complex beta, int size);

/// Elements <m|D(beta)|n> for m < rows, n < cols, evaluated from the
/// associated-Laguerre closed form (exact, not a truncated exponential).
FockMatrix displacement_matrix(Complex beta, int rows, int cols);

/// <psi|rho|psi>; psi is zero-padded or truncated to the cutoff.
double fidelity_with_pure(const FockDensityMatrix& rho, const FockVector& psi);

/// (1/2) sum |eigenvalues(a - b)|
double trace_distance(const FockDensityMatrix& a, const FockDensityMatrix& b);

}  // namespace phasedamp
