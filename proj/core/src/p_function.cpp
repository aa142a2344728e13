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

#include "phasedamp/p_function.hpp"

#include <cmath>
#include <type_traits>

#include "p_function_internal.hpp"
#include "phasedamp/quadrature.hpp"

namespace phasedamp {

DeltaDerivativeSeries DeltaDerivativeSeries::zero(Complex center, int max_degree, int truncation_order) {
  if (max_degree < 0 || truncation_order < 0) throw DomainError("DeltaDerivativeSeries: negative order");
  DeltaDerivativeSeries s;
  s.center = center;
  s.max_degree = max_degree;
  s.truncation_order = truncation_order;
  s.coeffs.assign(static_cast<std::size_t>((max_degree + 1) * (max_degree + 1)), 0.0);
  return s;
}

GaussianPolynomial GaussianPolynomial::zero(Complex center, double width, int degree) {
  if (!(width > 0.0)) throw DomainError("GaussianPolynomial: width must be positive");
  GaussianPolynomial g;
  g.center = center;
  g.width = width;
  g.degree = degree;
  g.coeffs.assign(static_cast<std::size_t>((degree + 1) * (degree + 1)), 0.0);
  return g;
}

GaussianPolynomial GaussianPolynomial::normalized_gaussian(Complex center, double width) {
  auto g = zero(center, width, 0);
  g.coeff(0, 0) = 1.0 / (kPi * width);
  return g;
}

PKind kind_of(const PFunctionDescriptor& p) {
  return static_cast<PKind>(p.index());
}

std::string_view to_string(PKind k) {
  switch (k) {
    case PKind::Delta: return "delta";
    case PKind::DeltaDerivativeSeries: return "delta-derivative-series";
    case PKind::GaussianPolynomial: return "gaussian-polynomial";
    case PKind::USeries: return "u-series";
    case PKind::SampledGrid: return "sampled-grid";
  }
  return "?";
}

bool is_singular(const PFunctionDescriptor& p) {
  return std::holds_alternative<DeltaP>(p) || std::holds_alternative<DeltaDerivativeSeries>(p);
}

namespace detail {

double evaluate_gaussian_polynomial(const GaussianPolynomial& g, Complex alpha) {
  const double x = alpha.real() - g.center.real();
  const double y = alpha.imag() - g.center.imag();
  double poly = 0.0;
  double xp = 1.0;
  for (int p = 0; p <= g.degree; ++p) {
    double row = 0.0;
    double yq = 1.0;
    for (int q = 0; q <= g.degree; ++q) {
      row += g.coeff(p, q) * yq;
      yq *= y;
    }
    poly += row * xp;
    xp *= x;
  }
  return poly * std::exp(-(x * x + y * y) / g.width);
}

double evaluate_u_series(const SeparableUSeries& s, Complex alpha) {
  const double x = alpha.real() - s.center.real();
  const double y = alpha.imag() - s.center.imag();
  auto axis_sum = [&](const std::vector<double>& terms, double u) {
    if (terms.empty()) return 0.0;
    const int n_max = static_cast<int>(terms.size()) - 1;
    double buffer[128];
    std::vector<double> heap;
    double* values = buffer;
    if (n_max >= 128) {
      heap.resize(static_cast<std::size_t>(n_max + 1));
      values = heap.data();
    }
    tricomi_u_half_sequence(n_max, u * u / s.width, values);
    double sum = 0.0;
    for (int n = 0; n <= n_max; ++n) sum += terms[static_cast<std::size_t>(n)] * values[n];
    return sum;
  };
  const double gauss = std::exp(-(x * x + y * y) / s.width) / (kPi * s.width);
  return gauss * axis_sum(s.re_terms, x) * axis_sum(s.im_terms, y);
}

Box u_series_box(const SeparableUSeries& s) {
  auto half_width = [&](const std::vector<double>& terms) {
    double kappa = 0.0;
    if (terms.size() > 1 && terms[0] != 0.0) kappa = std::abs(terms[1] / terms[0]);
    return 9.0 * std::sqrt(0.5 * s.width * (1.0 + kappa));
  };
  const double hx = half_width(s.re_terms);
  const double hy = half_width(s.im_terms);
  return {s.center.real() - hx, s.center.real() + hx, s.center.imag() - hy, s.center.imag() + hy};
}

Box gaussian_polynomial_box(const GaussianPolynomial& g) {
  const double sigma = std::sqrt(0.5 * g.width);
  const double half = std::sqrt(0.5 * g.degree * g.width) + 8.0 * sigma;
  return {g.center.real() - half, g.center.real() + half, g.center.imag() - half, g.center.imag() + half};
}

double gaussian_moment(int p, double width) {
  // integral of x^p exp(-x^2/width) over the real line
  if (p % 2 != 0) return 0.0;
  return std::tgamma(0.5 * (p + 1)) * std::pow(width, 0.5 * (p + 1));
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

double evaluate_p(const PFunctionDescriptor& p, Complex alpha) {
  return std::visit(
      [&](const auto& form) -> double {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, DeltaP> || std::is_same_v<T, DeltaDerivativeSeries>) {
          throw DomainError("evaluate_p: singular P-function has no pointwise value");
        } else if constexpr (std::is_same_v<T, GaussianPolynomial>) {
          return detail::evaluate_gaussian_polynomial(form, alpha);
        } else if constexpr (std::is_same_v<T, SeparableUSeries>) {
          return detail::evaluate_u_series(form, alpha);
        } else {
          return form.grid.interpolate(alpha);
        }
      },
      p);
}

PFunctionDescriptor rescale_argument(const PFunctionDescriptor& p, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("rescale_argument: lambda must be positive");
  return std::visit(
      [&](const auto& form) -> PFunctionDescriptor {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, DeltaP>) {
          return DeltaP{form.center / lambda};
        } else if constexpr (std::is_same_v<T, DeltaDerivativeSeries>) {
          auto out = form;
          out.center = form.center / lambda;
          for (int j = 0; j <= form.max_degree; ++j)
            for (int k = 0; k <= form.max_degree; ++k) out.coeff(j, k) = form.coeff(j, k) * std::pow(lambda, -(j + k));
          return out;
        } else if constexpr (std::is_same_v<T, GaussianPolynomial>) {
          auto out = form;
          out.center = form.center / lambda;
          out.width = form.width / (lambda * lambda);
          for (int a = 0; a <= form.degree; ++a)
            for (int b = 0; b <= form.degree; ++b) out.coeff(a, b) = form.coeff(a, b) * std::pow(lambda, a + b + 2);
          return out;
        } else if constexpr (std::is_same_v<T, SeparableUSeries>) {
          auto out = form;
          out.center = form.center / lambda;
          out.width = form.width / (lambda * lambda);
          return out;
        } else {
          const auto& g = form.grid;
          PhaseSpaceGrid scaled(UniformAxis(g.x_axis().min() / lambda, g.x_axis().max() / lambda, g.nx()),
                                UniformAxis(g.y_axis().min() / lambda, g.y_axis().max() / lambda, g.ny()), g.meta());
          for (std::size_t iy = 0; iy < g.ny(); ++iy)
            for (std::size_t ix = 0; ix < g.nx(); ++ix) scaled.at(ix, iy) = g.at(ix, iy) * lambda * lambda;
          return SampledP{std::move(scaled)};
        }
      },
      p);
}

double real_moment(const PFunctionDescriptor& p, int pr, int pi) {
  using detail::binomial;
  using detail::gaussian_moment;
  return std::visit(
      [&](const auto& form) -> double {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, DeltaP>) {
          return std::pow(form.center.real(), pr) * std::pow(form.center.imag(), pi);
        } else if constexpr (std::is_same_v<T, DeltaDerivativeSeries>) {
          // Each derivative moves onto the monomial with a sign flip.
          auto falling = [](int power, int order, double at) {
            if (order > power) return 0.0;
            double f = 1.0;
            for (int i = 0; i < order; ++i) f *= power - i;
            return f * std::pow(at, power - order);
          };
          double sum = 0.0;
          for (int j = 0; j <= form.max_degree; ++j)
            for (int k = 0; k <= form.max_degree; ++k) {
              const double c = form.coeff(j, k);
              if (c == 0.0) continue;
              const double sign = ((j + k) % 2 == 0) ? 1.0 : -1.0;
              sum += sign * c * falling(pr, j, form.center.real()) * falling(pi, k, form.center.imag());
            }
          return sum;
        } else if constexpr (std::is_same_v<T, GaussianPolynomial>) {
          auto axis = [&](int power, int extra, double shift) {
            double s = 0.0;
            for (int l = 0; l <= power; ++l)
              s += binomial(power, l) * std::pow(shift, power - l) * gaussian_moment(l + extra, form.width);
            return s;
          };
          double sum = 0.0;
          for (int a = 0; a <= form.degree; ++a)
            for (int b = 0; b <= form.degree; ++b) {
              const double c = form.coeff(a, b);
              if (c == 0.0) continue;
              sum += c * axis(pr, a, form.center.real()) * axis(pi, b, form.center.imag());
            }
          return sum;
        } else if constexpr (std::is_same_v<T, SeparableUSeries>) {
          auto f = [&](double x, double y) {
            return std::pow(x, pr) * std::pow(y, pi) * detail::evaluate_u_series(form, Complex(x, y));
          };
          const auto r = integrate_2d(f, detail::u_series_box(form), 1e-11);
          if (!r.converged) throw ConvergenceError("real_moment: quadrature did not converge", r.error_estimate);
          return r.value;
        } else {
          return form.grid.integrate_weighted(
              [&](Complex a) { return std::pow(a.real(), pr) * std::pow(a.imag(), pi); });
        }
      },
      p);
}

MomentSet moments_from_p(const PFunctionDescriptor& p) {
  const double m10 = real_moment(p, 1, 0), m01 = real_moment(p, 0, 1);
  const double m20 = real_moment(p, 2, 0), m02 = real_moment(p, 0, 2), m11 = real_moment(p, 1, 1);
  const double m40 = real_moment(p, 4, 0), m04 = real_moment(p, 0, 4), m22 = real_moment(p, 2, 2);
  return moments_from_normal_ordered(Complex(m10, m01), Complex(m20 - m02, 2.0 * m11), m20 + m02,
                                     m40 + 2.0 * m22 + m04);
}

MomentSet moments_from_normal_ordered(Complex mean_a, Complex mean_a2, double mean_n, double second_factorial) {
  MomentSet m;
  m.mean_a = mean_a;
  m.mean_n = mean_n;
  m.second_factorial = second_factorial;
  m.var_x = (2.0 * mean_a2.real() + 2.0 * mean_n + 1.0) / 4.0 - mean_a.real() * mean_a.real();
  m.var_y = (-2.0 * mean_a2.real() + 2.0 * mean_n + 1.0) / 4.0 - mean_a.imag() * mean_a.imag();
  return m;
}

}  // namespace phasedamp
