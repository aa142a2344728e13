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

#include "phasedamp/p_function.hpp"
#include "phasedamp/quadrature.hpp"

namespace phasedamp::detail {

double evaluate_gaussian_polynomial(const GaussianPolynomial& g, Complex alpha);
double evaluate_u_series(const SeparableUSeries& s, Complex alpha);

/// Integration boxes outside which the form is negligible.
Box u_series_box(const SeparableUSeries& s);
Box gaussian_polynomial_box(const GaussianPolynomial& g);

double gaussian_moment(int p, double width);
double binomial(int n, int k);

}  // namespace phasedamp::detail
