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

#include "phasedamp/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <type_traits>
#include <vector>

#include "p_function_internal.hpp"
#include "phasedamp/quadrature.hpp"

namespace phasedamp {

namespace {

// Rounding floor of a sum whose terms have absolute sum `magnitude`; sums
// below it are indistinguishable from an exact zero.
constexpr double kCancellationUlps = 16.0;

SmoothedValue settle(double sum, double magnitude, double prefactor) {
  const double floor = kCancellationUlps * std::numeric_limits<double>::epsilon() * magnitude;
  if (std::abs(sum) <= floor) sum = 0.0;
  return {sum * prefactor, floor * prefactor};
}

double kernel_value(Complex alpha, Complex beta, const SmoothingKernel& k) {
  return std::exp(-std::norm(alpha - k.decay * beta) / k.width) / (kPi * k.width);
}

SmoothedValue smooth_delta_derivatives(const DeltaDerivativeSeries& s, Complex alpha, const SmoothingKernel& k) {
  const double root_w = std::sqrt(k.width);
  const double yr = (alpha.real() - k.decay * s.center.real()) / root_w;
  const double yi = (alpha.imag() - k.decay * s.center.imag()) / root_w;
  std::vector<double> hr(static_cast<std::size_t>(s.max_degree + 1)), hi(hr.size());
  hermite_sequence(s.max_degree, yr, hr.data());
  hermite_sequence(s.max_degree, yi, hi.data());
  // d^j/dbeta_r^j of the kernel is (decay/sqrt(w))^j H_j(yr) K; the
  // integration by parts contributes (-1)^j.
  const double step = -k.decay / root_w;
  std::vector<double> powers(hr.size());
  powers[0] = 1.0;
  for (std::size_t j = 1; j < powers.size(); ++j) powers[j] = powers[j - 1] * step;
  double sum = 0.0, magnitude = 0.0;
  for (int j = 0; j <= s.max_degree; ++j) {
    const double outer = powers[static_cast<std::size_t>(j)] * hr[static_cast<std::size_t>(j)];
    for (int l = 0; l <= s.max_degree; ++l) {
      const double c = s.coeff(j, l);
      if (c == 0.0) continue;
      const double term = c * powers[static_cast<std::size_t>(l)] * hi[static_cast<std::size_t>(l)] * outer;
      sum += term;
      magnitude += std::abs(term);
    }
  }
  return settle(sum, magnitude, std::exp(-(yr * yr + yi * yi)) / (kPi * k.width));
}

// Per-axis integrals of x^p exp(-x^2/W) exp(-(a - c x)^2/w), without the
// common exponential factor exp(-a^2/(w + c^2 W)).
std::vector<double> axis_integrals(int degree, double a, double big_w, const SmoothingKernel& k) {
  const double kk = 1.0 / big_w + k.decay * k.decay / k.width;
  const double mu = a * k.decay / (k.width * kk);
  std::vector<double> out(static_cast<std::size_t>(degree + 1));
  for (int p = 0; p <= degree; ++p) {
    double s = 0.0;
    for (int l = 0; l <= p; l += 2)
      s += detail::binomial(p, l) * std::pow(mu, p - l) * detail::gaussian_moment(l, 1.0 / kk);
    out[static_cast<std::size_t>(p)] = s;
  }
  return out;
}

SmoothedValue smooth_gaussian_polynomial_exact(const GaussianPolynomial& g, Complex alpha, const SmoothingKernel& k) {
  const double ar = alpha.real() - k.decay * g.center.real();
  const double ai = alpha.imag() - k.decay * g.center.imag();
  const auto ir = axis_integrals(g.degree, ar, g.width, k);
  const auto ii = axis_integrals(g.degree, ai, g.width, k);
  double sum = 0.0, magnitude = 0.0;
  for (int p = 0; p <= g.degree; ++p)
    for (int q = 0; q <= g.degree; ++q) {
      const double c = g.coeff(p, q);
      if (c == 0.0) continue;
      const double term = c * ir[static_cast<std::size_t>(p)] * ii[static_cast<std::size_t>(q)];
      sum += term;
      magnitude += std::abs(term);
    }
  const double spread = k.width + k.decay * k.decay * g.width;
  return settle(sum, magnitude, std::exp(-(ar * ar + ai * ai) / spread) / (kPi * k.width));
}

// Restricts a P-function box to where the kernel is non-negligible.
Box clip_to_kernel(Box box, Complex alpha, const SmoothingKernel& k) {
  if (k.decay <= 0.0) return box;
  const double half = 8.5 * std::sqrt(0.5 * k.width) / k.decay;
  const double cx = alpha.real() / k.decay, cy = alpha.imag() / k.decay;
  box.x0 = std::max(box.x0, cx - half);
  box.x1 = std::min(box.x1, cx + half);
  box.y0 = std::max(box.y0, cy - half);
  box.y1 = std::min(box.y1, cy + half);
  return box;
}

template <typename F>
SmoothedValue smooth_by_quadrature(F&& p_of_beta, Box box, Complex alpha, const SmoothingKernel& k,
                                   double tolerance) {
  box = clip_to_kernel(box, alpha, k);
  if (!(box.x1 > box.x0) || !(box.y1 > box.y0)) return {0.0, 0.0};
  auto integrand = [&](double x, double y) {
    const Complex beta(x, y);
    return p_of_beta(beta) * kernel_value(alpha, beta, k);
  };
  const auto r = integrate_2d(integrand, box, tolerance);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "smooth_p: quadrature error estimate " << r.error_estimate << " exceeds tolerance " << tolerance;
    throw ConvergenceError(msg.str(), r.error_estimate);
  }
  return {r.value, r.error_estimate};
}

SmoothedValue smooth_sampled(const PhaseSpaceGrid& g, Complex alpha, const SmoothingKernel& k) {
  auto weighted_sum = [&](std::size_t stride) {
    double sum = 0.0;
    const std::size_t lx = (g.nx() - 1) / stride, ly = (g.ny() - 1) / stride;
    for (std::size_t jy = 0; jy <= ly; ++jy) {
      const double wy = (jy == 0 || jy == ly) ? 0.5 : 1.0;
      for (std::size_t jx = 0; jx <= lx; ++jx) {
        const double wx = (jx == 0 || jx == lx) ? 0.5 : 1.0;
        const std::size_t ix = jx * stride, iy = jy * stride;
        sum += wx * wy * g.at(ix, iy) * kernel_value(alpha, g.point(ix, iy), k);
      }
    }
    return sum * g.x_axis().spacing() * g.y_axis().spacing() * static_cast<double>(stride * stride);
  };
  const double fine = weighted_sum(1);
  double err = 0.0;
  if ((g.nx() - 1) % 2 == 0 && (g.ny() - 1) % 2 == 0 && g.nx() >= 5 && g.ny() >= 5) err = std::abs(fine - weighted_sum(2));
  return {fine, err};
}

}  // namespace

SmoothedValue smooth_p(const PFunctionDescriptor& p, Complex alpha, SmoothingKernel kernel, SmoothingMethod method,
                       double tolerance) {
  if (!(kernel.width > 0.0)) throw DomainError("smooth_p: kernel width must be positive");
  return std::visit(
      [&](const auto& form) -> SmoothedValue {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, DeltaP>) {
          return {kernel_value(alpha, form.center, kernel), 0.0};
        } else if constexpr (std::is_same_v<T, DeltaDerivativeSeries>) {
          return smooth_delta_derivatives(form, alpha, kernel);
        } else if constexpr (std::is_same_v<T, GaussianPolynomial>) {
          if (method == SmoothingMethod::ClosedForm) return smooth_gaussian_polynomial_exact(form, alpha, kernel);
          return smooth_by_quadrature([&](Complex b) { return detail::evaluate_gaussian_polynomial(form, b); },
                                      detail::gaussian_polynomial_box(form), alpha, kernel, tolerance);
        } else if constexpr (std::is_same_v<T, SeparableUSeries>) {
          return smooth_by_quadrature([&](Complex b) { return detail::evaluate_u_series(form, b); },
                                      detail::u_series_box(form), alpha, kernel, tolerance);
        } else {
          return smooth_sampled(form.grid, alpha, kernel);
        }
      },
      p);
}

}  // namespace phasedamp
