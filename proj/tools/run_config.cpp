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

#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace phasedamp::cli {

namespace {

constexpr Artifact kArtifacts[] = {Artifact::PGrid,   Artifact::QGrid,     Artifact::WGrid,        Artifact::Moments,
                                   Artifact::MandelQ, Artifact::Variances, Artifact::OracleCompare};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

double to_double(const std::string& field, const std::string& text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw UsageError(field + ": expected a number, got '" + text + "'");
  }
  return v;
}

long to_integer(const std::string& field, const std::string& text) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(field + ": expected an integer, got '" + text + "'");
  }
  return v;
}

UniformAxis parse_axis(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("grid: axis must be min:max:count, got '" + text + "'");
  const double lo = to_double("grid", parts[0]);
  const double hi = to_double("grid", parts[1]);
  const long n = to_integer("grid", parts[2]);
  if (n < 8) throw UsageError("grid: resolution must be at least 8 per axis");
  if (!(hi > lo)) throw UsageError("grid: axis max must exceed min");
  return UniformAxis(lo, hi, static_cast<std::size_t>(n));
}

std::string axis_text(const UniformAxis& a) {
  return format_double(a.min()) + ":" + format_double(a.max()) + ":" + std::to_string(a.size());
}

bool to_bool(const std::string& field, const std::string& text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw UsageError(field + ": expected true or false, got '" + text + "'");
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string artifact_name(Artifact a) {
  switch (a) {
    case Artifact::PGrid: return "p-grid";
    case Artifact::QGrid: return "q-grid";
    case Artifact::WGrid: return "w-grid";
    case Artifact::Moments: return "moments";
    case Artifact::MandelQ: return "mandel-q";
    case Artifact::Variances: return "variances";
    case Artifact::OracleCompare: return "oracle-compare";
  }
  return "?";
}

std::optional<Artifact> parse_artifact(const std::string& name) {
  for (auto a : kArtifacts)
    if (artifact_name(a) == name) return a;
  return std::nullopt;
}

bool RunConfig::wants(Artifact a) const { return std::find(outputs.begin(), outputs.end(), a) != outputs.end(); }

int RunConfig::resolved_cutoff() const {
  if (oracle_cutoff) return *oracle_cutoff;
  // <n>(t) stays between the initial mean and the bath occupation.
  const double occupation = std::max(initial_moments(state).mean_n, nbar);
  return std::max(default_cutoff(state), static_cast<int>(std::ceil(20.0 * (occupation + 1.0))));
}

double RunConfig::resolved_step() const {
  if (oracle_step) return *oracle_step;
  return std::min(1e-3, 0.4 / (gamma * (1.0 + 2.0 * nbar) * resolved_cutoff()));
}

RunConfig parse_run_config(const std::map<std::string, std::string>& kv) {
  static const char* const kKnown[] = {"state", "beta_re", "beta_im", "mbar",          "squeeze",     "gamma",
                                       "nbar",  "times",   "grid",    "outputs",       "out",         "format",
                                       "oracle_cutoff",    "oracle_step", "compare"};
  for (const auto& [key, value] : kv) {
    if (std::find_if(std::begin(kKnown), std::end(kKnown), [&](const char* k) { return key == k; }) ==
        std::end(kKnown)) {
      throw UsageError(key + ": unknown configuration key");
    }
  }
  RunConfig c;
  try {
    c.state = parse_state_spec(kv);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (auto v = get("gamma")) c.gamma = to_double("gamma", *v);
  if (auto v = get("nbar")) c.nbar = to_double("nbar", *v);
  if (auto v = get("times")) {
    c.times.clear();
    for (const auto& t : split(*v, ',')) c.times.push_back(to_double("times", t));
  }
  if (auto v = get("grid")) {
    const auto axes = split(*v, ',');
    if (axes.empty() || axes.size() > 2) throw UsageError("grid: expected xmin:xmax:n[,ymin:ymax:n]");
    c.grid.x = parse_axis(axes[0]);
    c.grid.y = axes.size() == 2 ? parse_axis(axes[1]) : c.grid.x;
  }
  if (auto v = get("outputs")) {
    c.outputs.clear();
    for (const auto& name : split(*v, ',')) {
      const auto a = parse_artifact(name);
      if (!a) throw UsageError("outputs: unknown artifact '" + name + "'");
      if (!c.wants(*a)) c.outputs.push_back(*a);
    }
  }
  if (auto v = get("compare"); v && to_bool("compare", *v) && !c.wants(Artifact::OracleCompare)) {
    c.outputs.push_back(Artifact::OracleCompare);
  }
  if (auto v = get("out")) c.output_dir = *v;
  if (auto v = get("format")) {
    if (*v == "csv") {
      c.format = OutputFormat::Csv;
    } else if (*v == "json") {
      c.format = OutputFormat::Json;
    } else {
      throw UsageError("format: expected csv or json, got '" + *v + "'");
    }
  }
  if (auto v = get("oracle_cutoff")) c.oracle_cutoff = static_cast<int>(to_integer("oracle_cutoff", *v));
  if (auto v = get("oracle_step")) c.oracle_step = to_double("oracle_step", *v);
  validate(c);
  return c;
}

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config: line " + std::to_string(number) + " is not of the form key = value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::map<std::string, std::string> to_key_values(const RunConfig& c) {
  auto kv = phasedamp::to_key_values(c.state);
  kv["gamma"] = format_double(c.gamma);
  kv["nbar"] = format_double(c.nbar);
  std::string times;
  for (std::size_t i = 0; i < c.times.size(); ++i) times += (i ? "," : "") + format_double(c.times[i]);
  kv["times"] = times;
  kv["grid"] = axis_text(c.grid.x) + "," + axis_text(c.grid.y);
  std::string outputs;
  for (std::size_t i = 0; i < c.outputs.size(); ++i) outputs += (i ? "," : "") + artifact_name(c.outputs[i]);
  kv["outputs"] = outputs;
  kv["out"] = c.output_dir;
  kv["format"] = c.format == OutputFormat::Csv ? "csv" : "json";
  if (c.oracle_cutoff) kv["oracle_cutoff"] = std::to_string(*c.oracle_cutoff);
  if (c.oracle_step) kv["oracle_step"] = format_double(*c.oracle_step);
  return kv;
}

void validate(const RunConfig& c) {
  try {
    c.state.validate();
    (void)c.bath();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (c.times.empty()) throw UsageError("times: at least one sample time is required");
  for (double t : c.times)
    if (!(t >= 0.0)) throw UsageError("times: sample times must be non-negative");
  if (!std::is_sorted(c.times.begin(), c.times.end())) throw UsageError("times: sample times must be sorted");
  if (c.grid.x.size() < 8 || c.grid.y.size() < 8) throw UsageError("grid: resolution must be at least 8 per axis");
  if (c.outputs.empty()) throw UsageError("outputs: at least one artifact is required");
  if (c.output_dir.empty()) throw UsageError("out: output directory must not be empty");
  if (c.oracle_cutoff && *c.oracle_cutoff < 2) throw UsageError("oracle_cutoff: must be at least 2");
  if (c.oracle_step && !(*c.oracle_step > 0.0)) throw UsageError("oracle_step: must be positive");
}

}  // namespace phasedamp::cli
