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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace phasedamp::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kOracleTolerance = 1e-5;

enum ExitCode : int { kExitOk = 0, kExitOracleMismatch = 1, kExitUsage = 2, kExitIo = 3, kExitNumerical = 4 };

struct WrittenFile {
  std::string path;
  Artifact artifact;
  double time;
  double error_estimate;
};

struct Comparison {
  double time;
  std::string observable;
  double analytic;
  double oracle;
  double abs_diff() const;
};

struct RunReport {
  std::vector<WrittenFile> files;
  std::vector<Comparison> comparisons;
  double max_deviation = 0.0;
  std::string manifest_path;
  int exit_code = kExitOk;
};

/// Writes one file per (artifact, time) and a manifest.json into
/// config.output_dir. Data files contain no timestamps and are formatted
/// with a fixed evaluation order, so identical configs give identical bytes.
RunReport run(const RunConfig& config);

/// Catalog listing: human-readable text or JSON with a runnable example
/// configuration for each family.
void list_states(std::ostream& out, bool json);

}  // namespace phasedamp::cli
