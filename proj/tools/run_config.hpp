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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phasedamp/grid.hpp"
#include "phasedamp/phase_core.hpp"
#include "phasedamp/states.hpp"

namespace phasedamp::cli {

/// Invalid configuration; the message names the offending field.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Artifact { PGrid, QGrid, WGrid, Moments, MandelQ, Variances, OracleCompare };
enum class OutputFormat { Csv, Json };

std::string artifact_name(Artifact a);
std::optional<Artifact> parse_artifact(const std::string& name);

struct GridSpec {
  UniformAxis x{-6.0, 6.0, 61};
  UniformAxis y{-6.0, 6.0, 61};
};

struct RunConfig {
  StateSpec state;
  double gamma = 1.0;
  double nbar = 0.0;
  std::vector<double> times{0.0};
  GridSpec grid;
  std::vector<Artifact> outputs{Artifact::Moments};
  std::optional<int> oracle_cutoff;
  std::optional<double> oracle_step;
  std::string output_dir = "phasedamp-out";
  OutputFormat format = OutputFormat::Csv;

  BathParams bath() const { return BathParams(gamma, nbar); }
  bool wants(Artifact a) const;
  bool needs_oracle() const { return wants(Artifact::WGrid) || wants(Artifact::OracleCompare); }
  /// Oracle cutoff and step after defaults are filled in: cutoff
  /// max(default_cutoff(state), ceil(20 (max(<n>_0, nbar) + 1))), step
  /// min(1e-3, 0.4 / (gamma (1 + 2 nbar) cutoff)).
  int resolved_cutoff() const;
  double resolved_step() const;
};

/// Key-value form shared by config files and flag parsing. Keys:
/// state, beta_re, beta_im, mbar, squeeze, gamma, nbar, times, grid,
/// outputs, out, format, oracle_cutoff, oracle_step, compare.
RunConfig parse_run_config(const std::map<std::string, std::string>& kv);

/// Reads `key = value` lines; '#' starts a comment.
std::map<std::string, std::string> read_key_value_file(const std::string& path);

/// Canonical key-value echo of a config (inverse of parse_run_config).
std::map<std::string, std::string> to_key_values(const RunConfig& config);

/// Throws UsageError on the first violated invariant.
void validate(const RunConfig& config);

std::string format_double(double v);

}  // namespace phasedamp::cli
