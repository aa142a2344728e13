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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <algorithm>

#include "runner.hpp"

using namespace phasedamp;
using namespace phasedamp::cli;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("phasedamp_test_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::map<std::string, std::string> base() {
  return {{"state", "coherent"}, {"beta_re", "1"}, {"beta_im", "0"}, {"gamma", "1"}, {"nbar", "0"}};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("invalid configurations are usage errors") {
  auto with = [](std::string k, std::string v) {
    auto kv = base();
    kv[k] = v;
    return kv;
  };
  CHECK_THROWS_AS(parse_run_config(with("grid", "-1:1:4")), UsageError);
  CHECK_THROWS_AS(parse_run_config(with("times", "1,0.5")), UsageError);
  CHECK_THROWS_AS(parse_run_config(with("outputs", "moments,r-grid")), UsageError);
  CHECK_THROWS_AS(parse_run_config(with("colour", "blue")), UsageError);
  CHECK_THROWS_AS(parse_run_config(with("format", "xml")), UsageError);
  CHECK_THROWS_AS(parse_run_config(with("gamma", "-1")), UsageError);
  CHECK_THROWS_AS(parse_run_config(with("state", "cat")), UsageError);
}

TEST_CASE("config round-trips through its key-value echo") {
  auto kv = base();
  kv["state"] = "scs";
  kv["beta_im"] = "-0.25";
  kv["squeeze"] = "2";
  kv["times"] = "0,0.1,0.7";
  kv["grid"] = "-3:3:21,-2:2:17";
  kv["outputs"] = "q-grid,variances";
  kv["format"] = "json";
  const RunConfig c = parse_run_config(kv);
  const RunConfig d = parse_run_config(to_key_values(c));
  CHECK(to_key_values(c) == to_key_values(d));
  CHECK(d.state == c.state);
  CHECK(d.times == c.times);
  CHECK(d.grid.y.size() == 17);
  CHECK(d.format == OutputFormat::Json);
}

TEST_CASE("config files are read as key-value pairs") {
  const fs::path dir = scratch("file");
  fs::create_directories(dir);
  std::ofstream(dir / "run.cfg") << "# comment\nstate = thermal\nmbar = 0.5  # inline\n\ntimes = 0,1\n";
  const auto kv = read_key_value_file((dir / "run.cfg").string());
  CHECK(kv.at("state") == "thermal");
  CHECK(kv.at("mbar") == "0.5");
  CHECK(parse_run_config(kv).times.size() == 2);
  CHECK_THROWS_AS(read_key_value_file((dir / "missing.cfg").string()), UsageError);
}

TEST_CASE("run writes one file per artifact and time plus a manifest") {
  auto kv = base();
  kv["state"] = "pats";
  kv["mbar"] = "0.4";
  kv["times"] = "0,0.5,1";
  kv["grid"] = "-3:3:13";
  kv["outputs"] = "q-grid,mandel-q";
  const fs::path out = scratch("pats");
  kv["out"] = out.string();
  const RunReport report = run(parse_run_config(kv));
  CHECK(report.exit_code == kExitOk);
  CHECK(report.files.size() == 6);
  for (const auto& f : report.files) CHECK(fs::exists(out / f.path));
  CHECK(fs::exists(out / "q-grid_t000.csv"));
  CHECK(slurp(out / "q-grid_t000.csv").rfind("re_alpha,im_alpha,value\n", 0) == 0);
  const auto manifest = nlohmann::json::parse(slurp(report.manifest_path));
  CHECK(manifest["files"].size() == 6);
  CHECK(manifest["exit_code"] == 0);
}

TEST_CASE("oracle comparison of a damped coherent state passes") {
  auto kv = base();
  kv["beta_re"] = "1.5";
  kv["nbar"] = "0.3";
  kv["times"] = "0,0.5";
  kv["outputs"] = "oracle-compare";
  kv["out"] = scratch("oracle").string();
  const RunReport report = run(parse_run_config(kv));
  REQUIRE_FALSE(report.comparisons.empty());
  for (const auto& c : report.comparisons) CHECK(c.abs_diff() < kOracleTolerance);
  CHECK(report.max_deviation < kOracleTolerance);
  CHECK(report.exit_code == kExitOk);
}

TEST_CASE("vacuum Q grid peaks at 1/pi at the origin") {
  auto kv = base();
  kv["beta_re"] = "0";
  kv["grid"] = "-2:2:21";
  kv["outputs"] = "q-grid";
  kv["format"] = "json";
  kv["out"] = scratch("vacuum").string();
  const RunReport report = run(parse_run_config(kv));
  REQUIRE(report.files.size() == 1);
  const auto j = nlohmann::json::parse(slurp(fs::path(kv["out"]) / report.files[0].path));
  const auto values = j["values"].get<std::vector<double>>();
  REQUIRE(values.size() == 21 * 21);
  CHECK(values[10 * 21 + 10] == Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(*std::max_element(values.begin(), values.end()) == Approx(1.0 / kPi).epsilon(1e-14));
}

TEST_CASE("list-states JSON examples are runnable configurations") {
  std::ostringstream out;
  list_states(out, true);
  const auto j = nlohmann::json::parse(out.str());
  REQUIRE(j["families"].size() == 6);
  for (const auto& f : j["families"]) {
    std::map<std::string, std::string> kv;
    for (const auto& [k, v] : f["example"].items()) kv[k] = v.get<std::string>();
    CHECK_NOTHROW(parse_run_config(kv));
  }
  std::ostringstream text;
  list_states(text, false);
  CHECK(text.str().find("pats") != std::string::npos);
}

TEST_CASE("P grid of a delta-supported state is a usage error") {
  auto kv = base();
  kv["outputs"] = "p-grid";
  kv["out"] = scratch("singular").string();
  CHECK_THROWS_AS(run(parse_run_config(kv)), UsageError);
  CHECK_FALSE(fs::exists(scratch("singular") / "manifest.json"));
}

TEST_CASE("unwritable output directory is an I/O error") {
  const fs::path dir = scratch("blocked");
  fs::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  auto kv = base();
  kv["out"] = (dir / "file" / "sub").string();
  CHECK_THROWS_AS(run(parse_run_config(kv)), IoError);
}

TEST_CASE("oracle cutoff too small for comparison is a usage error") {
  auto kv = base();
  kv["state"] = "pats";
  kv["mbar"] = "1";
  kv["outputs"] = "oracle-compare";
  kv["oracle_cutoff"] = "24";
  kv["out"] = scratch("small_cutoff").string();
  CHECK_THROWS_AS(run(parse_run_config(kv)), UsageError);
  kv["oracle_cutoff"] = "8";
  CHECK_THROWS_AS(run(parse_run_config(kv)), UsageError);
  CHECK_FALSE(fs::exists(scratch("small_cutoff") / "manifest.json"));
}

TEST_CASE("oracle mismatch sets the mismatch exit code and still writes files") {
  auto kv = base();
  kv["state"] = "pats";
  kv["mbar"] = "1";
  kv["times"] = "0,1";
  kv["outputs"] = "oracle-compare";
  kv["oracle_cutoff"] = "28";
  kv["out"] = scratch("mismatch").string();
  const RunReport report = run(parse_run_config(kv));
  CHECK(report.exit_code == kExitOracleMismatch);
  CHECK(report.max_deviation > kOracleTolerance);
  CHECK(report.files.size() == 2);
  CHECK(fs::exists(report.manifest_path));
}
