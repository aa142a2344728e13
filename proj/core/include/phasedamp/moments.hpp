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

#include "phasedamp/phase_core.hpp"

namespace phasedamp {

/// Low-order field moments: <a>, <a^dag a>, <a^dag^2 a^2> and the variances
/// of X = (a + a^dag)/2 and Y = (a - a^dag)/2i.
struct MomentSet {
  Complex mean_a{};
  double mean_n = 0.0;
  double second_factorial = 0.0;
  double var_x = 0.25;
  double var_y = 0.25;
};

/// Builds a MomentSet from normally ordered moments <a>, <a^2>,
/// <a^dag a> and <a^dag^2 a^2>.
MomentSet moments_from_normal_ordered(Complex mean_a, Complex mean_a2, double mean_n, double second_factorial);

/// <(dn)^2> - <n>, the numerator of the Mandel parameter.
inline double mandel_numerator(const MomentSet& m) { return m.second_factorial - m.mean_n * m.mean_n; }

}  // namespace phasedamp
