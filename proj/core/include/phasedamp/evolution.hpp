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

#include "phasedamp/grid.hpp"
#include "phasedamp/moments.hpp"
#include "phasedamp/p_function.hpp"
#include "phasedamp/phase_core.hpp"
#include "phasedamp/states.hpp"

namespace phasedamp {

/// P(alpha; t) of a catalog state together with the bath scaling it was
/// evolved under.
struct EvolvedPFunction {
  StateSpec spec;
  ScaledBathParams scaled;
  PFunctionDescriptor form;
  /// Size of the last retained term of a truncated series (0 otherwise).
  double series_remainder = 0.0;
};

/// Closed-form evolved P-function of a catalog state.
///
/// A coherent state spreads into a displaced thermal Gaussian of width
/// nbar_t around beta e^{-gamma t}; thermal and displaced thermal states
/// widen to mbar e^{-2 gamma t} + nbar_t; the photon-added and squeezed
/// families use their dedicated formulas. At t = 0 the initial descriptor is
/// returned unchanged, and a zero-temperature bath is routed through
/// evolve_p_zero_temperature because the thermal kernel degenerates.
///
/// The squeezed-coherent U-series converges only while
/// |(1-s)/(2s)| and |(s-1)/2| stay below nbar_t e^{2 gamma t}; outside that
/// range a ConvergenceError is thrown.
EvolvedPFunction evolve_p_closed_form(const StateSpec& spec, const BathParams& bath, double t,
                                      int series_order = kDefaultSeriesOrder);

/// P(alpha; t) = integral d^2beta P(beta; 0) exp(-|alpha - beta_t|^2/nbar_t)/(pi nbar_t)
/// evaluated at every point of `axes`. Requires nbar_t > 0. The returned
/// grid carries the largest per-point quadrature error estimate.
PhaseSpaceGrid convolve_p_numeric(const PFunctionDescriptor& p0, const BathParams& bath, double t,
                                  const UniformAxis& x_axis, const UniformAxis& y_axis, double tolerance = 1e-9);

/// P(alpha e^{gamma t}; 0) e^{2 gamma t}
PFunctionDescriptor evolve_p_zero_temperature(const PFunctionDescriptor& p0, double gamma, double t);

MomentSet evolved_moments(const MomentSet& m0, const BathParams& bath, double t);

/// Mandel Q at time t from the initial moments. DomainError when the evolved
/// mean photon number vanishes.
double mandel_q(const MomentSet& m0, const BathParams& bath, double t);

/// Samples a regular descriptor on a grid.
PhaseSpaceGrid sample_p(const PFunctionDescriptor& p, const UniformAxis& x_axis, const UniformAxis& y_axis);

/// Default evaluation grid: 61 x 61 points over [-6, 6]^2.
UniformAxis default_axis();

}  // namespace phasedamp
