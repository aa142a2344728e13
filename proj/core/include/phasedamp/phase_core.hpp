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

#include <complex>
#include <stdexcept>
#include <string>

namespace phasedamp {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Raised when an argument lies outside the mathematical domain of an
/// operation (negative time, non-finite amplitude, vacuum denominator...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a numerical procedure cannot reach its requested accuracy.
/// Carries the best available error estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// A point in phase space. Both quadrature components are finite.
class ComplexAmplitude {
 public:
  constexpr ComplexAmplitude() = default;
  ComplexAmplitude(double re, double im);
  explicit ComplexAmplitude(Complex z);

  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  Complex value() const noexcept { return z_; }
  /// |alpha|^2
  double norm() const noexcept { return std::norm(z_); }

  friend bool operator==(const ComplexAmplitude&, const ComplexAmplitude&) = default;

 private:
  Complex z_{};
};

/// Thermal bath coupling: decay rate gamma > 0 and mean occupancy nbar >= 0.
class BathParams {
 public:
  BathParams(double gamma, double nbar);

  double gamma() const noexcept { return gamma_; }
  double nbar() const noexcept { return nbar_; }

 private:
  double gamma_;
  double nbar_;
};

/// Time-scaled image of a bath: decay_factor = exp(-gamma t) and
/// nbar_t = nbar (1 - exp(-2 gamma t)).
struct ScaledBathParams {
  double decay_factor = 1.0;
  double nbar_t = 0.0;
  double t = 0.0;

  double decay_sq() const noexcept { return decay_factor * decay_factor; }
};

ScaledBathParams scale_bath(const BathParams& params, double t);

/// beta * exp(-gamma t)
ComplexAmplitude displace_amplitude(const ComplexAmplitude& beta, const ScaledBathParams& scaled);

/// Generalized Laguerre polynomial L_n^{(a)}(x) by the three-term recurrence.
double assoc_laguerre(int n, double a, double x);

/// Tricomi confluent hypergeometric U(-n, 1/2, x) for integer n >= 0, via
/// U(-n, b, x) = (-1)^n n! L_n^{(b-1)}(x).
double tricomi_u_half(int n, double x);

/// Fills out[0..n_max] with U(-n, 1/2, x) using the same recurrence.
void tricomi_u_half_sequence(int n_max, double x, double* out);

/// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

/// Fills out[0..n_max] with H_0(x)..H_{n_max}(x).
void hermite_sequence(int n_max, double x, double* out);

}  // namespace phasedamp
