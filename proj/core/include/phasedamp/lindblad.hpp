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

#include <vector>

#include "phasedamp/fock.hpp"
#include "phasedamp/moments.hpp"
#include "phasedamp/phase_core.hpp"

namespace phasedamp {

/// Truncated-Fock RK4 integrator settings.
///
/// The explicit scheme is stable while the largest Liouvillian rate stays
/// well inside the RK4 stability region; the rates grow like
/// gamma (1 + 2 nbar) times the Fock index, so we require
/// step * gamma * (1 + 2 nbar) * cutoff < 0.5.
class LindbladSettings {
 public:
  LindbladSettings(int cutoff, double step, BathParams bath);

  int cutoff() const noexcept { return cutoff_; }
  double step() const noexcept { return step_; }
  const BathParams& bath() const noexcept { return bath_; }

 private:
  int cutoff_;
  double step_;
  BathParams bath_;
};

/// Right-hand side of the thermal-bath master equation,
///   G(1+n)(2 a rho a^dag - a^dag a rho - rho a^dag a)
/// + G n   (2 a^dag rho a - a a^dag rho - rho a a^dag),
/// with a, a^dag truncated at the cutoff.
FockMatrix apply_liouvillian(const FockMatrix& rho, const BathParams& bath);
FockMatrix apply_liouvillian(const FockDensityMatrix& rho, const BathParams& bath);

struct IntegrationResult {
  std::vector<FockDensityMatrix> states;  // one per sample time
  double max_trace_drift = 0.0;
  /// Smallest eigenvalue seen across the emitted samples.
  double min_eigenvalue = 0.0;
  long steps = 0;
};

/// Classic RK4 from t = 0 to t_final, re-Hermitizing after every step and
/// landing exactly on each sample time. Aborts with ConvergenceError when
/// the trace drifts by more than 1e-6.
IntegrationResult integrate(const FockDensityMatrix& rho0, const LindbladSettings& settings, double t_final,
                            const std::vector<double>& sample_times);

struct HusimiEstimate {
  double value = 0.0;
  /// Weight of |alpha> outside the truncated basis.
  double truncation_error = 0.0;
  bool guard_violated = false;
};

/// (1/pi) <alpha|rho|alpha>. The guard |alpha|^2 < cutoff/4 is reported,
/// not enforced.
HusimiEstimate husimi_q_checked(const FockDensityMatrix& rho, Complex alpha);
double husimi_q(const FockDensityMatrix& rho, Complex alpha);

inline constexpr double kMomentTraceDeficitLimit = 1e-6;

/// All MomentSet fields from traces against truncated operators. Requires
/// a trace deficit at most kMomentTraceDeficitLimit.
MomentSet moments_from_rho(const FockDensityMatrix& rho);

/// Mandel Q from traces; DomainError for a vacuum state.
double mandel_q_from_rho(const FockDensityMatrix& rho);

}  // namespace phasedamp
