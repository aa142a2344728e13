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

#include "phasedamp/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "phasedamp/smoothing.hpp"

namespace phasedamp {

namespace {

GaussianPolynomial evolved_photon_added_thermal(double m, const ScaledBathParams& sc) {
  const double e2 = sc.decay_sq();
  const double spread = m * e2 + sc.nbar_t;
  auto g = GaussianPolynomial::zero({}, spread, 2);
  const double lead = (m + 1.0) * e2 / (kPi * spread * spread * spread);
  g.coeff(2, 0) = lead;
  g.coeff(0, 2) = lead;
  g.coeff(0, 0) = (sc.nbar_t - e2) / (kPi * spread * spread);
  return g;
}

GaussianPolynomial evolved_photon_added_coherent(Complex beta, const ScaledBathParams& sc) {
  // [|u alpha + v beta|^2 + v] exp(-|alpha - beta e^{-gamma t}|^2/nbar_t) / (pi nbar_t (|beta|^2+1))
  // with u = e^{-gamma t}/nbar_t and v = 1 - e^{-2 gamma t}/nbar_t, rewritten in
  // z = alpha - beta e^{-gamma t}: u alpha + v beta = u z + (u e^{-gamma t} + v) beta.
  const double c = sc.decay_factor;
  const double nt = sc.nbar_t;
  const double u = c / nt;
  const double v = 1.0 - sc.decay_sq() / nt;
  const Complex shift = (u * c + v) * beta;
  const double pref = 1.0 / (kPi * nt * (std::norm(beta) + 1.0));
  auto g = GaussianPolynomial::zero(beta * c, nt, 2);
  g.coeff(2, 0) = u * u * pref;
  g.coeff(0, 2) = u * u * pref;
  g.coeff(1, 0) = 2.0 * u * shift.real() * pref;
  g.coeff(0, 1) = 2.0 * u * shift.imag() * pref;
  g.coeff(0, 0) = (std::norm(shift) + v) * pref;
  return g;
}

SeparableUSeries evolved_squeezed_coherent(Complex beta, double s, const ScaledBathParams& sc, int order,
                                           double& remainder) {
  const double scale = 4.0 * sc.decay_sq() / sc.nbar_t;
  const double kappa_re = scale * (1.0 - s) / (8.0 * s);
  const double kappa_im = scale * (s - 1.0) / 8.0;
  const double ratio = std::max(std::abs(kappa_re), std::abs(kappa_im));
  if (!(ratio < 1.0)) {
    std::ostringstream msg;
    msg << "evolve_p_closed_form: squeezed-coherent U-series diverges (term ratio " << ratio
        << " >= 1); nbar_t is too small relative to the squeezing at t=" << sc.t;
    throw ConvergenceError(msg.str(), ratio);
  }
  SeparableUSeries out;
  out.center = beta * sc.decay_factor;
  out.width = sc.nbar_t;
  out.re_terms.resize(static_cast<std::size_t>(order + 1));
  out.im_terms.resize(out.re_terms.size());
  double tr = 1.0, ti = 1.0;
  for (int n = 0; n <= order; ++n) {
    out.re_terms[static_cast<std::size_t>(n)] = tr;
    out.im_terms[static_cast<std::size_t>(n)] = ti;
    tr *= kappa_re / (n + 1);
    ti *= kappa_im / (n + 1);
  }
  remainder = std::pow(ratio, order + 1);
  return out;
}

}  // namespace

EvolvedPFunction evolve_p_closed_form(const StateSpec& spec, const BathParams& bath, double t, int series_order) {
  if (!(t >= 0.0)) throw DomainError("evolve_p_closed_form: time must be non-negative");
  spec.validate();
  EvolvedPFunction out{spec, scale_bath(bath, t), initial_p_function(spec, series_order), 0.0};
  if (t == 0.0) return out;
  if (bath.nbar() == 0.0) {
    out.form = evolve_p_zero_temperature(out.form, bath.gamma(), t);
    return out;
  }
  const ScaledBathParams& sc = out.scaled;
  const double e2 = sc.decay_sq();
  switch (spec.family) {
    case StateFamily::Coherent:
      out.form = GaussianPolynomial::normalized_gaussian(spec.beta * sc.decay_factor, sc.nbar_t);
      break;
    case StateFamily::Thermal:
      out.form = GaussianPolynomial::normalized_gaussian({}, spec.mbar * e2 + sc.nbar_t);
      break;
    case StateFamily::DisplacedThermal:
      out.form = GaussianPolynomial::normalized_gaussian(spec.beta * sc.decay_factor, spec.mbar * e2 + sc.nbar_t);
      break;
    case StateFamily::PhotonAddedThermal:
      out.form = evolved_photon_added_thermal(spec.mbar, sc);
      break;
    case StateFamily::PhotonAddedCoherent:
      out.form = evolved_photon_added_coherent(spec.beta, sc);
      break;
    case StateFamily::SqueezedCoherent:
      out.form = evolved_squeezed_coherent(spec.beta, spec.squeeze, sc, series_order, out.series_remainder);
      break;
  }
  return out;
}

PhaseSpaceGrid convolve_p_numeric(const PFunctionDescriptor& p0, const BathParams& bath, double t,
                                  const UniformAxis& x_axis, const UniformAxis& y_axis, double tolerance) {
  const ScaledBathParams sc = scale_bath(bath, t);
  if (!(sc.nbar_t > 0.0)) throw DomainError("convolve_p_numeric: requires nbar_t > 0");
  const SmoothingKernel kernel{sc.decay_factor, sc.nbar_t};
  GridMeta meta;
  meta.quantity = GridQuantity::P;
  meta.provenance = "convolution";
  meta.time = t;
  PhaseSpaceGrid grid(x_axis, y_axis, meta);
  double worst = 0.0;
  for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
      const auto r = smooth_p(p0, grid.point(ix, iy), kernel, SmoothingMethod::Quadrature, tolerance);
      grid.at(ix, iy) = r.value;
      worst = std::max(worst, r.error_estimate);
    }
  }
  grid.meta().error_estimate = worst;
  return grid;
}

PFunctionDescriptor evolve_p_zero_temperature(const PFunctionDescriptor& p0, double gamma, double t) {
  if (!(t >= 0.0)) throw DomainError("evolve_p_zero_temperature: time must be non-negative");
  if (!(gamma > 0.0)) throw DomainError("evolve_p_zero_temperature: gamma must be positive");
  if (t == 0.0) return p0;
  return rescale_argument(p0, std::exp(gamma * t));
}

MomentSet evolved_moments(const MomentSet& m0, const BathParams& bath, double t) {
  const ScaledBathParams sc = scale_bath(bath, t);
  if (t == 0.0) return m0;
  const double e2 = sc.decay_sq();
  const double nt = sc.nbar_t;
  MomentSet m;
  m.mean_a = m0.mean_a * sc.decay_factor;
  m.mean_n = m0.mean_n * e2 + nt;
  m.var_x = (2.0 * nt + 1.0) / 4.0 + (m0.var_x - 0.25) * e2;
  m.var_y = (2.0 * nt + 1.0) / 4.0 + (m0.var_y - 0.25) * e2;
  // <(dn)^2> - <n> propagates as the Mandel numerator; <a^dag^2 a^2> is that plus <n>^2.
  const double numerator = mandel_numerator(m0) * e2 * e2 + 2.0 * nt * m0.mean_n * e2 + nt * nt;
  m.second_factorial = numerator + m.mean_n * m.mean_n;
  return m;
}

double mandel_q(const MomentSet& m0, const BathParams& bath, double t) {
  const ScaledBathParams sc = scale_bath(bath, t);
  const double e2 = sc.decay_sq();
  const double nt = sc.nbar_t;
  const double denominator = m0.mean_n * e2 + nt;
  if (!(denominator > 0.0)) throw DomainError("mandel_q: undefined for a vacuum field");
  const double numerator = mandel_numerator(m0) * e2 * e2 + 2.0 * nt * m0.mean_n * e2 + nt * nt;
  return numerator / denominator;
}

PhaseSpaceGrid sample_p(const PFunctionDescriptor& p, const UniformAxis& x_axis, const UniformAxis& y_axis) {
  if (is_singular(p)) throw DomainError("sample_p: singular P-function cannot be sampled on a grid");
  GridMeta meta;
  meta.quantity = GridQuantity::P;
  meta.provenance = "closed-form";
  return sample_grid(x_axis, y_axis, meta, [&](Complex a) { return evaluate_p(p, a); });
}

UniformAxis default_axis() { return UniformAxis(-6.0, 6.0, 61); }

}  // namespace phasedamp
