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

#include "phasedamp/phase_core.hpp"

#include <cmath>

namespace phasedamp {

ComplexAmplitude::ComplexAmplitude(double re, double im) : z_(re, im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("ComplexAmplitude: components must be finite");
  }
}

ComplexAmplitude::ComplexAmplitude(Complex z) : ComplexAmplitude(z.real(), z.imag()) {}

BathParams::BathParams(double gamma, double nbar) : gamma_(gamma), nbar_(nbar) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("BathParams: gamma must be positive and finite");
  }
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw DomainError("BathParams: nbar must be non-negative and finite");
  }
}

ScaledBathParams scale_bath(const BathParams& params, double t) {
  if (!(t >= 0.0)) throw DomainError("scale_bath: time must be non-negative");
  ScaledBathParams out;
  out.t = t;
  out.decay_factor = std::exp(-params.gamma() * t);
  // -expm1 keeps nbar_t accurate for small gamma t.
  out.nbar_t = -params.nbar() * std::expm1(-2.0 * params.gamma() * t);
  return out;
}

ComplexAmplitude displace_amplitude(const ComplexAmplitude& beta, const ScaledBathParams& scaled) {
  return ComplexAmplitude(beta.value() * scaled.decay_factor);
}

namespace {

// Extended precision in the recurrence buys accuracy near the roots.
long double laguerre_extended(int n, double a, double x) {
  long double prev = 1.0L;
  if (n == 0) return prev;
  const long double al = a;
  const long double xl = x;
  long double cur = 1.0L + al - xl;
  for (int k = 1; k < n; ++k) {
    const long double next = ((2.0L * k + 1.0L + al - xl) * cur - (k + al) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double assoc_laguerre(int n, double a, double x) {
  if (n < 0) throw DomainError("assoc_laguerre: degree must be non-negative");
  return static_cast<double>(laguerre_extended(n, a, x));
}

double tricomi_u_half(int n, double x) {
  if (n < 0) throw DomainError("tricomi_u_half: n must be non-negative");
  long double factorial = 1.0L;
  for (int k = 2; k <= n; ++k) factorial *= k;
  const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
  return static_cast<double>(sign * factorial * laguerre_extended(n, -0.5, x));
}

void tricomi_u_half_sequence(int n_max, double x, double* out) {
  // L_k^{(-1/2)}(x) with the running (-1)^k k! folded in.
  long double prev = 1.0L;
  long double cur = 0.5L - static_cast<long double>(x);
  long double scale = 1.0L;
  out[0] = 1.0;
  if (n_max >= 1) out[1] = static_cast<double>(-cur);
  for (int k = 1; k < n_max; ++k) {
    const long double next = ((2.0L * k + 0.5L - x) * cur - (k - 0.5L) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
    scale *= -(k + 1.0L);
    out[k + 1] = static_cast<double>(-scale * cur);
  }
}

double hermite(int n, double x) {
  if (n < 0) throw DomainError("hermite: degree must be non-negative");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

void hermite_sequence(int n_max, double x, double* out) {
  out[0] = 1.0;
  if (n_max >= 1) out[1] = 2.0 * x;
  for (int k = 1; k < n_max; ++k) out[k + 1] = 2.0 * x * out[k] - 2.0 * k * out[k - 1];
}

}  // namespace phasedamp
