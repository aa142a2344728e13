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

#include "phasedamp/states.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace phasedamp {

std::string_view family_name(StateFamily f) {
  switch (f) {
    case StateFamily::Coherent: return "coherent";
    case StateFamily::Thermal: return "thermal";
    case StateFamily::PhotonAddedThermal: return "photon-added-thermal";
    case StateFamily::PhotonAddedCoherent: return "photon-added-coherent";
    case StateFamily::SqueezedCoherent: return "squeezed-coherent";
    case StateFamily::DisplacedThermal: return "displaced-thermal";
  }
  return "?";
}

std::optional<StateFamily> parse_family(std::string_view name) {
  for (auto f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  if (name == "pats") return StateFamily::PhotonAddedThermal;
  if (name == "pacs") return StateFamily::PhotonAddedCoherent;
  if (name == "scs") return StateFamily::SqueezedCoherent;
  return std::nullopt;
}

StateSpec StateSpec::coherent(Complex beta) {
  StateSpec s;
  s.family = StateFamily::Coherent;
  s.beta = beta;
  s.validate();
  return s;
}

StateSpec StateSpec::thermal(double mbar) {
  StateSpec s;
  s.family = StateFamily::Thermal;
  s.mbar = mbar;
  s.validate();
  return s;
}

StateSpec StateSpec::photon_added_thermal(double mbar) {
  StateSpec s;
  s.family = StateFamily::PhotonAddedThermal;
  s.mbar = mbar;
  s.validate();
  return s;
}

StateSpec StateSpec::photon_added_coherent(Complex beta) {
  StateSpec s;
  s.family = StateFamily::PhotonAddedCoherent;
  s.beta = beta;
  s.validate();
  return s;
}

StateSpec StateSpec::squeezed_coherent(Complex beta, double squeeze) {
  StateSpec s;
  s.family = StateFamily::SqueezedCoherent;
  s.beta = beta;
  s.squeeze = squeeze;
  s.validate();
  return s;
}

StateSpec StateSpec::displaced_thermal(Complex beta, double mbar) {
  StateSpec s;
  s.family = StateFamily::DisplacedThermal;
  s.beta = beta;
  s.mbar = mbar;
  s.validate();
  return s;
}

void StateSpec::validate() const {
  if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) throw DomainError("state: beta must be finite");
  if (!std::isfinite(mbar) || !std::isfinite(squeeze)) throw DomainError("state: parameters must be finite");
  switch (family) {
    case StateFamily::Thermal:
    case StateFamily::DisplacedThermal:
      if (mbar < 0.0) throw DomainError("state: mbar must be non-negative");
      break;
    case StateFamily::PhotonAddedThermal:
      if (!(mbar > 0.0)) throw DomainError("state: photon-added-thermal requires mbar > 0");
      break;
    case StateFamily::SqueezedCoherent:
      if (!(squeeze > 0.0)) throw DomainError("state: squeezed-coherent requires s > 0");
      break;
    default:
      break;
  }
}

double StateSpec::squeeze_exponent() const { return 0.5 * std::log(squeeze); }

namespace {

double parse_number(const std::map<std::string, std::string>& kv, const std::string& key, double fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  const std::string& text = it->second;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("state: field '" + key + "' is not a number: '" + text + "'");
  }
  return value;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

StateSpec parse_state_spec(const std::map<std::string, std::string>& kv) {
  const auto it = kv.find("state");
  if (it == kv.end()) throw DomainError("state: missing field 'state'");
  const auto family = parse_family(it->second);
  if (!family) throw DomainError("state: unknown family '" + it->second + "'");
  StateSpec s;
  s.family = *family;
  s.beta = Complex(parse_number(kv, "beta_re", 0.0), parse_number(kv, "beta_im", 0.0));
  s.mbar = parse_number(kv, "mbar", 0.0);
  s.squeeze = parse_number(kv, "squeeze", 1.0);
  s.validate();
  return s;
}

std::map<std::string, std::string> to_key_values(const StateSpec& spec) {
  std::map<std::string, std::string> kv;
  kv["state"] = std::string(family_name(spec.family));
  switch (spec.family) {
    case StateFamily::Coherent:
    case StateFamily::PhotonAddedCoherent:
      kv["beta_re"] = format_number(spec.beta.real());
      kv["beta_im"] = format_number(spec.beta.imag());
      break;
    case StateFamily::Thermal:
    case StateFamily::PhotonAddedThermal:
      kv["mbar"] = format_number(spec.mbar);
      break;
    case StateFamily::SqueezedCoherent:
      kv["beta_re"] = format_number(spec.beta.real());
      kv["beta_im"] = format_number(spec.beta.imag());
      kv["squeeze"] = format_number(spec.squeeze);
      break;
    case StateFamily::DisplacedThermal:
      kv["beta_re"] = format_number(spec.beta.real());
      kv["beta_im"] = format_number(spec.beta.imag());
      kv["mbar"] = format_number(spec.mbar);
      break;
  }
  return kv;
}

PFunctionDescriptor initial_p_function(const StateSpec& spec, int series_order) {
  spec.validate();
  switch (spec.family) {
    case StateFamily::Coherent:
      return DeltaP{spec.beta};
    case StateFamily::Thermal:
    case StateFamily::DisplacedThermal: {
      const Complex center = spec.family == StateFamily::Thermal ? Complex{} : spec.beta;
      if (spec.mbar == 0.0) return DeltaP{center};
      return GaussianPolynomial::normalized_gaussian(center, spec.mbar);
    }
    case StateFamily::PhotonAddedThermal: {
      // (m+1)/(pi m^3) (|alpha|^2 - m/(m+1)) exp(-|alpha|^2/m)
      const double m = spec.mbar;
      const double lead = (m + 1.0) / (kPi * m * m * m);
      auto g = GaussianPolynomial::zero({}, m, 2);
      g.coeff(2, 0) = lead;
      g.coeff(0, 2) = lead;
      g.coeff(0, 0) = -lead * m / (m + 1.0);
      return g;
    }
    case StateFamily::PhotonAddedCoherent: {
      // exp(|alpha|^2 - |beta|^2)/(|beta|^2 + 1) d^2/(dalpha dalpha*) delta(alpha - beta),
      // with the weight moved through the derivatives.
      const double norm = 1.0 + std::norm(spec.beta);
      auto s = DeltaDerivativeSeries::zero(spec.beta, 2, 0);
      s.coeff(0, 0) = 1.0;
      s.coeff(1, 0) = -spec.beta.real() / norm;
      s.coeff(0, 1) = -spec.beta.imag() / norm;
      s.coeff(2, 0) = 0.25 / norm;
      s.coeff(0, 2) = 0.25 / norm;
      return s;
    }
    case StateFamily::SqueezedCoherent: {
      if (series_order < 0) throw DomainError("initial_p_function: series order must be non-negative");
      // exp(a d^2/dalpha_r^2 + b d^2/dalpha_i^2) delta(alpha - beta)
      const double s = spec.squeeze;
      const double a = (1.0 - s) / (8.0 * s);
      const double b = (s - 1.0) / 8.0;
      auto d = DeltaDerivativeSeries::zero(spec.beta, 2 * series_order, series_order);
      double an = 1.0;
      for (int n = 0; n <= series_order; ++n) {
        double bm = 1.0;
        for (int m = 0; m <= series_order; ++m) {
          d.coeff(2 * n, 2 * m) = an * bm;
          bm *= b / (m + 1);
        }
        an *= a / (n + 1);
      }
      return d;
    }
  }
  throw DomainError("initial_p_function: unsupported family");
}

MomentSet initial_moments(const StateSpec& spec) {
  spec.validate();
  const Complex beta = spec.beta;
  const double b2 = std::norm(beta);
  switch (spec.family) {
    case StateFamily::Coherent:
      return moments_from_normal_ordered(beta, beta * beta, b2, b2 * b2);
    case StateFamily::Thermal:
      return moments_from_normal_ordered({}, {}, spec.mbar, 2.0 * spec.mbar * spec.mbar);
    case StateFamily::DisplacedThermal: {
      const double m = spec.mbar;
      return moments_from_normal_ordered(beta, beta * beta, b2 + m, b2 * b2 + 4.0 * b2 * m + 2.0 * m * m);
    }
    case StateFamily::PhotonAddedThermal: {
      const double m = spec.mbar;
      return moments_from_normal_ordered({}, {}, 2.0 * m + 1.0, 6.0 * m * m + 4.0 * m);
    }
    case StateFamily::PhotonAddedCoherent: {
      const double norm = 1.0 + b2;
      return moments_from_normal_ordered(beta * (b2 + 2.0) / norm, beta * beta * (b2 + 3.0) / norm,
                                         (b2 * b2 + 3.0 * b2 + 1.0) / norm,
                                         (b2 * b2 * b2 + 5.0 * b2 * b2 + 4.0 * b2) / norm);
    }
    case StateFamily::SqueezedCoherent: {
      // P is formally Gaussian with per-axis variances var - 1/4.
      const double s = spec.squeeze;
      const double sx = 1.0 / (4.0 * s) - 0.25;
      const double sy = s / 4.0 - 0.25;
      const double br = beta.real(), bi = beta.imag();
      const double f2 = b2 * b2 + 4.0 * (br * br * sx + bi * bi * sy) + 3.0 * sx * sx + 3.0 * sy * sy +
                        2.0 * sx * sy + 2.0 * b2 * (sx + sy);
      return moments_from_normal_ordered(beta, beta * beta + Complex(sx - sy, 0.0), b2 + sx + sy, f2);
    }
  }
  throw DomainError("initial_moments: unsupported family");
}

int default_cutoff(const StateSpec& spec) {
  const double n = initial_moments(spec).mean_n;
  return std::max(30, static_cast<int>(std::ceil(8.0 * (n + 1.0))));
}

namespace {

FockVector squeezed_vacuum(double r, int size) {
  FockVector v = FockVector::Zero(size);
  const double t = std::tanh(r);
  const double log_norm = -0.5 * std::log(std::cosh(r));
  for (int n = 0; 2 * n < size; ++n) {
    const double log_mag = log_norm + 0.5 * std::lgamma(2.0 * n + 1.0) - n * std::log(2.0) - std::lgamma(n + 1.0);
    v(2 * n) = std::pow(-t, n) * std::exp(log_mag);
  }
  return v;
}

FockMatrix symmetrized(FockMatrix m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

FockDensityMatrix fock_density(const StateSpec& spec, int cutoff) {
  spec.validate();
  if (cutoff < 2) throw DomainError("fock_density: cutoff must be at least 2");
  const int n = cutoff;
  FockMatrix rho = FockMatrix::Zero(n, n);
  auto thermal_weight = [](double m, int k) { return std::pow(m / (1.0 + m), k) / (1.0 + m); };
  switch (spec.family) {
    case StateFamily::Coherent: {
      const FockVector c = coherent_amplitudes(spec.beta, n);
      rho = c * c.adjoint();
      break;
    }
    case StateFamily::Thermal: {
      for (int k = 0; k < n; ++k) rho(k, k) = thermal_weight(spec.mbar, k);
      break;
    }
    case StateFamily::PhotonAddedThermal: {
      // a^dag rho_th a / Tr(a^dag rho_th a), Tr = mbar + 1
      for (int k = 1; k < n; ++k) rho(k, k) = k * thermal_weight(spec.mbar, k - 1) / (spec.mbar + 1.0);
      break;
    }
    case StateFamily::PhotonAddedCoherent: {
      const FockVector c = coherent_amplitudes(spec.beta, n);
      FockVector psi = FockVector::Zero(n);
      for (int k = 1; k < n; ++k) psi(k) = std::sqrt(static_cast<double>(k)) * c(k - 1);
      psi /= std::sqrt(1.0 + std::norm(spec.beta));
      rho = psi * psi.adjoint();
      break;
    }
    case StateFamily::SqueezedCoherent: {
      const int inner = std::max(2 * n, n + 80);
      const FockVector sq = squeezed_vacuum(spec.squeeze_exponent(), inner);
      const FockVector psi = displacement_matrix(spec.beta, n, inner) * sq;
      rho = psi * psi.adjoint();
      break;
    }
    case StateFamily::DisplacedThermal: {
      int inner = n + 40;
      while (spec.mbar > 0.0 && thermal_weight(spec.mbar, inner) > 1e-18 && inner < 20 * n) inner += 40;
      const FockMatrix d = displacement_matrix(spec.beta, n, inner);
      for (int k = 0; k < inner; ++k) {
        const double w = (spec.mbar == 0.0) ? (k == 0 ? 1.0 : 0.0) : thermal_weight(spec.mbar, k);
        if (w == 0.0) continue;
        rho.noalias() += w * d.col(k) * d.col(k).adjoint();
      }
      break;
    }
  }
  rho = symmetrized(std::move(rho));
  const double deficit = 1.0 - rho.trace().real();
  if (deficit > 1e-3) {
    std::ostringstream msg;
    msg << "fock_density: trace deficit " << deficit << " at cutoff " << cutoff << " is unusable";
    throw DomainError(msg.str());
  }
  return {std::move(rho), deficit};
}

}  // namespace phasedamp
