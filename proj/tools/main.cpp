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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "phasedamp/version.hpp"
#include "runner.hpp"

namespace {

struct FlagBinding {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr FlagBinding kFlags[] = {
    {"--state", "state", "state family (coherent, thermal, pats, pacs, scs, displaced-thermal)"},
    {"--mbar", "mbar", "thermal mean photon number of the initial state"},
    {"--beta-re", "beta_re", "real part of the initial displacement"},
    {"--beta-im", "beta_im", "imaginary part of the initial displacement"},
    {"--squeeze", "squeeze", "squeezed-coherent variance ratio s > 0"},
    {"--gamma", "gamma", "bath decay rate (> 0)"},
    {"--nbar", "nbar", "bath mean occupation (>= 0)"},
    {"--times", "times", "comma-separated sorted sample times"},
    {"--grid", "grid", "xmin:xmax:n[,ymin:ymax:n]"},
    {"--outputs", "outputs", "comma list of p-grid,q-grid,w-grid,moments,mandel-q,variances,oracle-compare"},
    {"--out", "out", "output directory"},
    {"--format", "format", "csv or json"},
    {"--oracle-cutoff", "oracle_cutoff", "Fock cutoff of the master-equation oracle"},
    {"--oracle-step", "oracle_step", "RK4 step of the master-equation oracle"},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace phasedamp::cli;

  CLI::App app{"Phase-space evolution of a damped bosonic mode in a thermal bath"};
  app.set_version_flag("--version", phasedamp::kVersion);

  std::map<std::string, std::string> flag_values;
  for (const auto& b : kFlags) {
    app.add_option_function<std::string>(b.flag, [&flag_values, key = b.key](const std::string& v) {
      flag_values[key] = v;
    }, b.help);
  }
  bool compare = false;
  app.add_flag("--compare", compare, "add oracle-compare to the outputs");
  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file; flags override it");

  auto* list = app.add_subcommand("list-states", "describe the state catalog");
  bool list_json = false;
  list->add_flag("--json", list_json, "machine-readable listing");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    list_states(std::cout, list_json);
    return kExitOk;
  }

  try {
    std::map<std::string, std::string> kv;
    if (!config_path.empty()) kv = read_key_value_file(config_path);
    for (const auto& [k, v] : flag_values) kv[k] = v;
    if (compare) kv["compare"] = "true";
    const RunConfig config = parse_run_config(kv);
    const RunReport report = run(config);
    std::cout << "wrote " << report.files.size() << " files and " << report.manifest_path << "\n";
    if (config.wants(Artifact::OracleCompare)) {
      std::cout << "oracle-compare max |analytic - oracle| = " << report.max_deviation << " (tolerance "
                << kOracleTolerance << "): " << (report.exit_code == kExitOk ? "pass" : "FAIL") << "\n";
    }
    return report.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const phasedamp::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
