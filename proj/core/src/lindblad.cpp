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

#include "phasedamp/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace phasedamp {

LindbladSettings::LindbladSettings(int cutoff, double step, BathParams bath)
    : cutoff_(cutoff), step_(step), bath_(bath) {
  if (cutoff < 2) throw DomainError("LindbladSettings: cutoff must be at least 2");
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("LindbladSettings: step must be positive");
  const double stiffness = step * bath.gamma() * (1.0 + 2.0 * bath.nbar()) * cutoff;
  if (!(stiffness < 0.5)) {
    std::ostringstream msg;
    msg << "LindbladSettings: step*gamma*(1+2 nbar)*cutoff = " << stiffness << " violates the stability bound 0.5";
    throw DomainError(msg.str());
  }
}

FockMatrix apply_liouvillian(const FockMatrix& rho, const BathParams& bath) {
  const Eigen::Index n = rho.rows();
  if (rho.cols() != n) throw DomainError("apply_liouvillian: matrix must be square");
  const double down = bath.gamma() * (1.0 + bath.nbar());
  const double up = bath.gamma() * bath.nbar();
  // Diagonal of a a^dag in the truncated algebra: k+1, except 0 on the top level.
  auto raise_diag = [n](Eigen::Index k) { return k + 1 < n ? static_cast<double>(k + 1) : 0.0; };
  FockMatrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      Complex v = -down * static_cast<double>(r + c) * rho(r, c);
      if (r + 1 < n && c + 1 < n) {
        v += 2.0 * down * std::sqrt(static_cast<double>((r + 1) * (c + 1))) * rho(r + 1, c + 1);
      }
      if (up != 0.0) {
        if (r > 0 && c > 0) v += 2.0 * up * std::sqrt(static_cast<double>(r * c)) * rho(r - 1, c - 1);
        v -= up * (raise_diag(r) + raise_diag(c)) * rho(r, c);
      }
      out(r, c) = v;
    }
  }
  return out;
}

FockMatrix apply_liouvillian(const FockDensityMatrix& rho, const BathParams& bath) {
  return apply_liouvillian(rho.elements(), bath);
}

IntegrationResult integrate(const FockDensityMatrix& rho0, const LindbladSettings& settings, double t_final,
                            const std::vector<double>& sample_times) {
  if (rho0.cutoff() != settings.cutoff()) throw DomainError("integrate: state cutoff differs from settings");
  if (!(t_final >= 0.0)) throw DomainError("integrate: t_final must be non-negative");
  if (!std::is_sorted(sample_times.begin(), sample_times.end())) {
    throw DomainError("integrate: sample times must be sorted");
  }
  for (double s : sample_times) {
    if (s < 0.0 || s > t_final) throw DomainError("integrate: sample time outside [0, t_final]");
  }

  const BathParams& bath = settings.bath();
  const double h_max = settings.step();
  const double trace0 = rho0.trace();

  IntegrationResult result;
  result.min_eigenvalue = rho0.min_eigenvalue();
  result.states.reserve(sample_times.size());

  FockMatrix rho = rho0.elements();
  double t = 0.0;

  auto emit = [&]() {
    FockDensityMatrix sample(rho, 1.0 - rho.trace().real());
    result.min_eigenvalue = std::min(result.min_eigenvalue, sample.min_eigenvalue());
    result.states.push_back(std::move(sample));
  };

  auto rk4_step = [&](double h) {
    const FockMatrix k1 = apply_liouvillian(rho, bath);
    const FockMatrix k2 = apply_liouvillian(rho + 0.5 * h * k1, bath);
    const FockMatrix k3 = apply_liouvillian(rho + 0.5 * h * k2, bath);
    const FockMatrix k4 = apply_liouvillian(rho + h * k3, bath);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    ++result.steps;
    const double drift = std::abs(rho.trace().real() - trace0);
    result.max_trace_drift = std::max(result.max_trace_drift, drift);
    if (drift > 1e-6) {
      std::ostringstream msg;
      msg << "integrate: trace drift " << drift << " at t=" << t << " exceeds 1e-6 (cutoff " << settings.cutoff()
          << ", step " << h_max << "); increase the cutoff or reduce the step";
      throw ConvergenceError(msg.str(), drift);
    }
  };

  for (double target : sample_times) {
    while (target - t > 1e-12 * std::max(1.0, target)) {
      // Land exactly on the target; avoid a sliver step just short of it.
      double h = std::min(h_max, target - t);
      if (target - t - h < 1e-9 * h_max) h = target - t;
      rk4_step(h);
      t += h;
    }
    t = target;
    emit();
  }
  return result;
}

HusimiEstimate husimi_q_checked(const FockDensityMatrix& rho, Complex alpha) {
  const int n = rho.cutoff();
  const FockVector c = coherent_amplitudes(alpha, n);
  HusimiEstimate est;
  est.value = (c.adjoint() * rho.elements() * c)(0).real() / kPi;
  est.truncation_error = std::max(0.0, 1.0 - c.squaredNorm());
  est.guard_violated = std::norm(alpha) >= 0.25 * n;
  return est;
}

double husimi_q(const FockDensityMatrix& rho, Complex alpha) { return husimi_q_checked(rho, alpha).value; }

MomentSet moments_from_rho(const FockDensityMatrix& rho) {
  if (rho.trace_deficit() > kMomentTraceDeficitLimit) throw DomainError("moments_from_rho: trace deficit above 1e-6");
  const auto& m = rho.elements();
  const int n = rho.cutoff();
  Complex mean_a{}, mean_a2{};
  double mean_n = 0.0, second = 0.0;
  for (int k = 0; k < n; ++k) {
    const double p = m(k, k).real();
    mean_n += k * p;
    second += static_cast<double>(k) * (k - 1) * p;
    if (k + 1 < n) mean_a += std::sqrt(static_cast<double>(k + 1)) * m(k + 1, k);
    if (k + 2 < n) mean_a2 += std::sqrt(static_cast<double>((k + 1) * (k + 2))) * m(k + 2, k);
  }
  return moments_from_normal_ordered(mean_a, mean_a2, mean_n, second);
}

double mandel_q_from_rho(const FockDensityMatrix& rho) {
  const MomentSet m = moments_from_rho(rho);
  if (!(m.mean_n > 0.0)) throw DomainError("mandel_q_from_rho: undefined for the vacuum");
  return mandel_numerator(m) / m.mean_n;
}

}  // namespace phasedamp
