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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "phasedamp/fock.hpp"
#include "phasedamp/moments.hpp"
#include "phasedamp/p_function.hpp"

namespace phasedamp {

enum class StateFamily {
  Coherent,
  Thermal,
  PhotonAddedThermal,
  PhotonAddedCoherent,
  SqueezedCoherent,
  DisplacedThermal,
};

inline constexpr std::array<StateFamily, 6> kAllFamilies = {
    StateFamily::Coherent,          StateFamily::Thermal,          StateFamily::PhotonAddedThermal,
    StateFamily::PhotonAddedCoherent, StateFamily::SqueezedCoherent, StateFamily::DisplacedThermal};

std::string_view family_name(StateFamily f);
std::optional<StateFamily> parse_family(std::string_view name);

/// Initial field state. Which parameters are meaningful depends on the
/// family: beta (coherent, pacs, scs, displaced thermal), mbar (thermal,
/// pats, displaced thermal) and the squeeze factor s (scs).
///
/// For the squeezed coherent state, s is the ratio of the two quadrature
/// variances: var_x = 1/(4 s), var_y = s/4. In terms of the exponent r of
/// S(r) = exp[(r/2)(a^2 - a^dag^2)] this is s = exp(2 r).
struct StateSpec {
  StateFamily family = StateFamily::Coherent;
  Complex beta{};
  double mbar = 0.0;
  double squeeze = 1.0;

  static StateSpec coherent(Complex beta);
  static StateSpec thermal(double mbar);
  static StateSpec photon_added_thermal(double mbar);
  static StateSpec photon_added_coherent(Complex beta);
  static StateSpec squeezed_coherent(Complex beta, double s);
  static StateSpec displaced_thermal(Complex beta, double mbar);

  /// Throws DomainError when the family constraints are violated.
  void validate() const;
  double squeeze_exponent() const;

  friend bool operator==(const StateSpec&, const StateSpec&) = default;
};

/// Parses family + parameters from key-value pairs. Recognized keys:
/// state, beta_re, beta_im, mbar, squeeze.
StateSpec parse_state_spec(const std::map<std::string, std::string>& kv);
/// The inverse of parse_state_spec, as `key=value` lines.
std::map<std::string, std::string> to_key_values(const StateSpec& spec);

inline constexpr int kDefaultSeriesOrder = 30;

/// Exact symbolic P(alpha; 0). For the squeezed coherent state the
/// derivative series is truncated after `series_order` terms per axis.
PFunctionDescriptor initial_p_function(const StateSpec& spec, int series_order = kDefaultSeriesOrder);

/// max(30, ceil(8 (<n> + 1)))
int default_cutoff(const StateSpec& spec);

/// Fock-basis density matrix at the given cutoff. Rejects cutoff < 2 and a
/// trace deficit above 1e-3.
FockDensityMatrix fock_density(const StateSpec& spec, int cutoff);

/// Closed-form <a>, <n>, <a^dag^2 a^2> and quadrature variances.
MomentSet initial_moments(const StateSpec& spec);

}  // namespace phasedamp
