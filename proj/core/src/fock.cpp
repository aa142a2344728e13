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

#include "phasedamp/fock.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace phasedamp {

FockDensityMatrix::FockDensityMatrix(FockMatrix elements, double trace_deficit)
    : elements_(std::move(elements)), trace_deficit_(trace_deficit) {
  if (elements_.rows() != elements_.cols()) throw DomainError("FockDensityMatrix: matrix must be square");
  if (elements_.rows() < 2) throw DomainError("FockDensityMatrix: cutoff must be at least 2");
  const double asym = (elements_ - elements_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) throw DomainError("FockDensityMatrix: matrix is not Hermitian");
  if (!elements_.allFinite()) throw DomainError("FockDensityMatrix: non-finite element");
}

FockDensityMatrix FockDensityMatrix::from_pure(const FockVector& psi) {
  FockMatrix rho = psi * psi.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return {std::move(rho), 1.0 - psi.squaredNorm()};
}

FockDensityMatrix FockDensityMatrix::number_state(int k, int cutoff) {
  if (k < 0 || k >= cutoff) throw DomainError("number_state: index outside the truncated basis");
  FockMatrix rho = FockMatrix::Zero(cutoff, cutoff);
  rho(k, k) = 1.0;
  return {std::move(rho), 0.0};
}

double FockDensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<FockMatrix> solver(elements_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

FockVector coherent_amplitudes(Complex beta, int size) {
  FockVector c(size);
  const double damp = std::exp(-0.5 * std::norm(beta));
  Complex term = damp;
  for (int n = 0; n < size; ++n) {
    c(n) = term;
    term *= beta / std::sqrt(static_cast<double>(n + 1));
  }
  return c;
}

FockMatrix displacement_matrix(Complex beta, int rows, int cols) {
  FockMatrix d = FockMatrix::Zero(rows, cols);
  const double x = std::norm(beta);
  if (x == 0.0) {
    for (int i = 0; i < std::min(rows, cols); ++i) d(i, i) = 1.0;
    return d;
  }
  const double log_mod = 0.5 * std::log(x);
  const double phase = std::arg(beta);
  // Walk each diagonal offset by the Laguerre recurrence in the lower index.
  auto fill_diagonal = [&](int offset, int count, auto&& store) {
    double l_prev = 0.0, l_cur = 1.0;
    for (int n = 0; n < count; ++n) {
      if (n == 1) {
        l_prev = 1.0;
        l_cur = 1.0 + offset - x;
      } else if (n > 1) {
        const double next = ((2.0 * (n - 1) + 1.0 + offset - x) * l_cur - (n - 1 + offset) * l_prev) / n;
        l_prev = l_cur;
        l_cur = next;
      }
      const double log_pref =
          0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + offset + 1.0)) - 0.5 * x + offset * log_mod;
      store(n, std::exp(log_pref) * l_cur);
    }
  };
  for (int offset = 0; offset < rows; ++offset) {
    const int count = std::min(cols, rows - offset);
    if (count <= 0) break;
    const Complex ph = std::polar(1.0, offset * phase);
    fill_diagonal(offset, count, [&](int n, double v) { d(n + offset, n) = v * ph; });
  }
  for (int offset = 1; offset < cols; ++offset) {
    const int count = std::min(rows, cols - offset);
    if (count <= 0) break;
    // (-beta*)^offset
    const Complex ph = std::polar(1.0, offset * (kPi - phase));
    fill_diagonal(offset, count, [&](int m, double v) { d(m, m + offset) = v * ph; });
  }
  return d;
}

double fidelity_with_pure(const FockDensityMatrix& rho, const FockVector& psi) {
  const int n = std::min<int>(rho.cutoff(), static_cast<int>(psi.size()));
  const FockVector v = psi.head(n);
  return (v.adjoint() * rho.elements().topLeftCorner(n, n) * v)(0).real();
}

double trace_distance(const FockDensityMatrix& a, const FockDensityMatrix& b) {
  if (a.cutoff() != b.cutoff()) throw DomainError("trace_distance: cutoff mismatch");
  FockMatrix diff = a.elements() - b.elements();
  diff = 0.5 * (diff + diff.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<FockMatrix> solver(diff, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace phasedamp
