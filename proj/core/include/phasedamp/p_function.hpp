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

#include <string_view>
#include <variant>
#include <vector>

#include "phasedamp/grid.hpp"
#include "phasedamp/moments.hpp"
#include "phasedamp/phase_core.hpp"

namespace phasedamp {

/// delta^2(alpha - center)
struct DeltaP {
  Complex center{};

  friend bool operator==(const DeltaP&, const DeltaP&) = default;
};

/// sum_{j,k} c_jk d^j/d(alpha_r)^j d^k/d(alpha_i)^k delta^2(alpha - center),
/// with j, k <= max_degree. `truncation_order` is the number of retained
/// terms of the underlying operator series (0 for a finite expression).
struct DeltaDerivativeSeries {
  Complex center{};
  int max_degree = 0;
  int truncation_order = 0;
  std::vector<double> coeffs;  // (max_degree+1)^2, row j, column k

  double coeff(int j, int k) const { return coeffs[static_cast<std::size_t>(j * (max_degree + 1) + k)]; }
  double& coeff(int j, int k) { return coeffs[static_cast<std::size_t>(j * (max_degree + 1) + k)]; }

  static DeltaDerivativeSeries zero(Complex center, int max_degree, int truncation_order);

  friend bool operator==(const DeltaDerivativeSeries&, const DeltaDerivativeSeries&) = default;
};

/// sum_{p,q} c_pq x^p y^q exp(-(x^2 + y^2)/width), where
/// x + iy = alpha - center.
struct GaussianPolynomial {
  Complex center{};
  double width = 1.0;
  int degree = 0;
  std::vector<double> coeffs;  // (degree+1)^2, row p, column q

  double coeff(int p, int q) const { return coeffs[static_cast<std::size_t>(p * (degree + 1) + q)]; }
  double& coeff(int p, int q) { return coeffs[static_cast<std::size_t>(p * (degree + 1) + q)]; }

  static GaussianPolynomial zero(Complex center, double width, int degree);
  /// exp(-|alpha - center|^2/width) / (pi width)
  static GaussianPolynomial normalized_gaussian(Complex center, double width);

  friend bool operator==(const GaussianPolynomial&, const GaussianPolynomial&) = default;
};

/// exp(-|z|^2/width)/(pi width) * [sum_n re_terms[n] U(-n,1/2,x^2/width)]
///                               * [sum_m im_terms[m] U(-m,1/2,y^2/width)]
/// with z = x + iy = alpha - center.
struct SeparableUSeries {
  Complex center{};
  double width = 1.0;
  std::vector<double> re_terms;
  std::vector<double> im_terms;

  friend bool operator==(const SeparableUSeries&, const SeparableUSeries&) = default;
};

struct SampledP {
  PhaseSpaceGrid grid;
};

using PFunctionDescriptor = std::variant<DeltaP, DeltaDerivativeSeries, GaussianPolynomial, SeparableUSeries, SampledP>;

enum class PKind { Delta, DeltaDerivativeSeries, GaussianPolynomial, USeries, SampledGrid };

PKind kind_of(const PFunctionDescriptor& p);
std::string_view to_string(PKind k);

/// True for delta and delta-derivative content, which cannot be evaluated
/// pointwise.
bool is_singular(const PFunctionDescriptor& p);

/// P(alpha); throws DomainError for singular descriptors.
double evaluate_p(const PFunctionDescriptor& p, Complex alpha);

/// Descriptor of P(lambda alpha) lambda^2.
PFunctionDescriptor rescale_argument(const PFunctionDescriptor& p, double lambda);

/// Integral of alpha_r^p alpha_i^q P(alpha) over phase space. Exact for
/// delta, delta-derivative and Gaussian-polynomial forms; quadrature
/// otherwise.
double real_moment(const PFunctionDescriptor& p, int pr, int pi);

/// Normally ordered moments read off the P-function.
MomentSet moments_from_p(const PFunctionDescriptor& p);

}  // namespace phasedamp
