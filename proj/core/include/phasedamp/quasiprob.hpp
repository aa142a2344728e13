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

#include "phasedamp/fock.hpp"
#include "phasedamp/grid.hpp"
#include "phasedamp/p_function.hpp"
#include "phasedamp/smoothing.hpp"

namespace phasedamp {

/// l = 1 (normal), 0 (symmetric), -1 (antinormal).
enum class Ordering { Normal, Symmetric, Antinormal };

inline constexpr double kAntinormalDirectLimit = 16.0;

struct CharacteristicValue {
  Complex value{};
  /// Set when |xi|^2 >= cutoff/4; the truncated trace may then be inaccurate.
  bool guard_violated = false;
};

/// chi^(l)(xi) as a direct trace for each ordering:
///   normal      Tr[rho exp(xi a^dag) exp(-xi* a)]
///   symmetric   Tr[rho D(xi)]
///   antinormal  Tr[rho exp(-xi* a) exp(xi a^dag)]
/// The normal and symmetric forms are exact in the truncated basis. The
/// antinormal product is summed over intermediate levels above the cutoff
/// in extended precision while |xi|^2 <= kAntinormalDirectLimit; past that
/// the alternating sum cancels below double resolution and the value is
/// taken from the normal-ordered product times exp(-|xi|^2).
CharacteristicValue characteristic_function_checked(const FockDensityMatrix& rho, Complex xi, Ordering ordering);
Complex characteristic_function(const FockDensityMatrix& rho, Complex xi, Ordering ordering);

/// Q(alpha) = (1/pi) integral P(beta) exp(-|alpha - beta|^2) d^2beta.
/// Closed form for delta, delta-derivative and Gaussian-polynomial
/// descriptors, quadrature otherwise.
SmoothedValue p_to_q_smoothing(const PFunctionDescriptor& p, Complex alpha, double tolerance = 1e-9);

PhaseSpaceGrid p_to_q_grid(const PFunctionDescriptor& p, const UniformAxis& x_axis, const UniformAxis& y_axis,
                           double tolerance = 1e-9);

/// W(alpha) = (1/pi^2) integral d^2xi exp(alpha xi* - alpha* xi) chi^(0)(xi),
/// as a direct discrete transform of chi^(0) sampled on a conjugate grid.
///
/// Conjugate grid: half-extent max(pi/h, sqrt(4 n_eff + 2) + 8) where h is
/// the finer alpha spacing and n_eff the highest populated Fock level, i.e.
/// twice the alpha-grid Nyquist frequency pi/(2h); spacing
/// pi / (2 (A + R)) with A the largest |alpha| component on the grid and
/// R = sqrt(2 n_eff + 1) + 6 the Wigner support radius, which keeps the
/// periodic images of W off the grid.
///
/// Throws DomainError when the imaginary residue exceeds 1e-8 or when
/// Tr(rho) and the integral of W over the grid differ by more than 1e-3.
PhaseSpaceGrid wigner_from_characteristic(const FockDensityMatrix& rho, const UniformAxis& x_axis,
                                          const UniformAxis& y_axis);

/// W(0) = (2/pi) Tr(rho (-1)^n)
double wigner_at_origin_parity(const FockDensityMatrix& rho);

}  // namespace phasedamp
