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

#include <array>
#include <cmath>

namespace phasedamp {

struct Box {
  double x0, x1, y0, y1;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

namespace detail {

inline constexpr int kGaussOrder = 12;

struct GaussLegendreRule {
  std::array<double, kGaussOrder> nodes{};
  std::array<double, kGaussOrder> weights{};
};

/// Nodes and weights on [-1, 1], computed once by Newton iteration.
const GaussLegendreRule& gauss_legendre_rule();

template <typename F>
double tensor_rule(F& f, const Box& b, long& evals) {
  const auto& rule = gauss_legendre_rule();
  const double cx = 0.5 * (b.x0 + b.x1), hx = 0.5 * (b.x1 - b.x0);
  const double cy = 0.5 * (b.y0 + b.y1), hy = 0.5 * (b.y1 - b.y0);
  double sum = 0.0;
  for (int j = 0; j < kGaussOrder; ++j) {
    const double y = cy + hy * rule.nodes[j];
    double row = 0.0;
    for (int i = 0; i < kGaussOrder; ++i) row += rule.weights[i] * f(cx + hx * rule.nodes[i], y);
    sum += rule.weights[j] * row;
  }
  evals += kGaussOrder * kGaussOrder;
  return sum * hx * hy;
}

template <typename F>
void adaptive_step(F& f, const Box& b, double coarse, double tol, int depth, QuadratureResult& acc) {
  const double mx = 0.5 * (b.x0 + b.x1), my = 0.5 * (b.y0 + b.y1);
  const std::array<Box, 4> kids = {Box{b.x0, mx, b.y0, my}, Box{mx, b.x1, b.y0, my}, Box{b.x0, mx, my, b.y1},
                                   Box{mx, b.x1, my, b.y1}};
  std::array<double, 4> fine{};
  double refined = 0.0;
  for (int k = 0; k < 4; ++k) {
    fine[k] = tensor_rule(f, kids[k], acc.evaluations);
    refined += fine[k];
  }
  const double err = std::abs(refined - coarse);
  if (err <= tol || depth == 0) {
    acc.value += refined;
    acc.error_estimate += err;
    if (err > tol) acc.converged = false;
    return;
  }
  for (int k = 0; k < 4; ++k) adaptive_step(f, kids[k], fine[k], 0.25 * tol, depth - 1, acc);
}

}  // namespace detail

/// Adaptive tensor-product Gauss-Legendre quadrature of f(x, y) over a box.
/// Each cell is compared against its four-way refinement; cells whose
/// difference exceeds their share of `abs_tol` are split further.
template <typename F>
QuadratureResult integrate_2d(F&& f, const Box& box, double abs_tol, int max_depth = 10) {
  QuadratureResult acc;
  const double coarse = detail::tensor_rule(f, box, acc.evaluations);
  detail::adaptive_step(f, box, coarse, abs_tol, max_depth, acc);
  if (acc.error_estimate > abs_tol) acc.converged = false;
  return acc;
}

}  // namespace phasedamp
