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

#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "phasedamp/evolution.hpp"
#include "phasedamp/lindblad.hpp"
#include "phasedamp/quasiprob.hpp"
#include "phasedamp/version.hpp"

namespace phasedamp::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

double Comparison::abs_diff() const { return std::abs(analytic - oracle); }

namespace {

using Rows = std::vector<std::pair<std::string, double>>;

std::string file_name(Artifact a, std::size_t index, OutputFormat format) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "_t%03zu", index);
  return artifact_name(a) + buf + (format == OutputFormat::Csv ? ".csv" : ".json");
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

ordered_json axis_json(const UniformAxis& a) {
  return ordered_json{{"min", a.min()}, {"max", a.max()}, {"count", a.size()}};
}

std::string grid_text(const PhaseSpaceGrid& g, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["quantity"] = std::string(to_string(g.meta().quantity));
    j["provenance"] = g.meta().provenance;
    j["time"] = g.meta().time;
    j["error_estimate"] = g.meta().error_estimate;
    j["x_axis"] = axis_json(g.x_axis());
    j["y_axis"] = axis_json(g.y_axis());
    j["values"] = g.values();
    return j.dump(1) + "\n";
  }
  std::string text = "re_alpha,im_alpha,value\n";
  for (std::size_t iy = 0; iy < g.ny(); ++iy)
    for (std::size_t ix = 0; ix < g.nx(); ++ix)
      text += format_double(g.x_axis()[ix]) + "," + format_double(g.y_axis()[iy]) + "," + format_double(g.at(ix, iy)) +
              "\n";
  return text;
}

std::string rows_text(double t, const Rows& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["time"] = t;
    for (const auto& [k, v] : rows) j[k] = v;
    return j.dump(1) + "\n";
  }
  std::string text = "quantity,value\ntime," + format_double(t) + "\n";
  for (const auto& [k, v] : rows) text += k + "," + format_double(v) + "\n";
  return text;
}

std::string comparison_text(double t, const std::vector<Comparison>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["time"] = t;
    j["tolerance"] = kOracleTolerance;
    ordered_json list = ordered_json::array();
    for (const auto& c : rows)
      list.push_back({{"observable", c.observable},
                      {"analytic", c.analytic},
                      {"oracle", c.oracle},
                      {"abs_diff", c.abs_diff()},
                      {"pass", c.abs_diff() <= kOracleTolerance}});
    j["observables"] = std::move(list);
    return j.dump(1) + "\n";
  }
  std::string text = "observable,analytic,oracle,abs_diff,pass\n";
  for (const auto& c : rows)
    text += c.observable + "," + format_double(c.analytic) + "," + format_double(c.oracle) + "," +
            format_double(c.abs_diff()) + "," + (c.abs_diff() <= kOracleTolerance ? "true" : "false") + "\n";
  return text;
}

Rows moment_rows(const MomentSet& m) {
  return {{"mean_a_re", m.mean_a.real()},       {"mean_a_im", m.mean_a.imag()}, {"mean_n", m.mean_n},
          {"second_factorial", m.second_factorial}, {"var_x", m.var_x},           {"var_y", m.var_y}};
}

}  // namespace

RunReport run(const RunConfig& config) {
  validate(config);
  const auto started = std::chrono::steady_clock::now();
  const BathParams bath = config.bath();
  const MomentSet m0 = initial_moments(config.state);
  const std::size_t count = config.times.size();

  // Closed-form P at every time, checked before any file is written.
  std::vector<std::optional<EvolvedPFunction>> evolved(count);
  if (config.wants(Artifact::PGrid) || config.wants(Artifact::QGrid)) {
    for (std::size_t i = 0; i < count; ++i) {
      evolved[i] = evolve_p_closed_form(config.state, bath, config.times[i]);
      if (config.wants(Artifact::PGrid) && is_singular(evolved[i]->form)) {
        throw UsageError("outputs: p-grid requested at t=" + format_double(config.times[i]) +
                         " where the P-function of " + std::string(family_name(config.state.family)) +
                         " is singular; request q-grid instead or use t > 0 with nbar > 0");
      }
    }
  }

  std::optional<IntegrationResult> oracle;
  std::optional<LindbladSettings> settings;
  if (config.needs_oracle()) {
    std::optional<FockDensityMatrix> rho0;
    try {
      settings.emplace(config.resolved_cutoff(), config.resolved_step(), bath);
      rho0.emplace(fock_density(config.state, settings->cutoff()));
      if (config.wants(Artifact::OracleCompare) && rho0->trace_deficit() > kMomentTraceDeficitLimit)
        throw DomainError("trace deficit " + format_double(rho0->trace_deficit()) + " at cutoff " +
                          std::to_string(settings->cutoff()) + " is too large for moment comparison");
    } catch (const DomainError& e) {
      throw UsageError(std::string("oracle_cutoff/oracle_step: ") + e.what());
    }
    oracle = integrate(*rho0, *settings, config.times.back(), config.times);
  }

  const fs::path dir(config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + config.output_dir + "'");

  RunReport report;
  auto emit = [&](Artifact a, std::size_t i, const std::string& text, double error_estimate) {
    const std::string name = file_name(a, i, config.format);
    write_text(dir / name, text);
    report.files.push_back({name, a, config.times[i], error_estimate});
  };

  for (std::size_t i = 0; i < count; ++i) {
    const double t = config.times[i];
    const MomentSet mt = evolved_moments(m0, bath, t);
    for (Artifact a : config.outputs) {
      switch (a) {
        case Artifact::PGrid: {
          PhaseSpaceGrid g = sample_p(evolved[i]->form, config.grid.x, config.grid.y);
          g.meta().time = t;
          emit(a, i, grid_text(g, config.format), evolved[i]->series_remainder);
          break;
        }
        case Artifact::QGrid: {
          PhaseSpaceGrid g = p_to_q_grid(evolved[i]->form, config.grid.x, config.grid.y);
          g.meta().time = t;
          emit(a, i, grid_text(g, config.format), std::max(g.meta().error_estimate, evolved[i]->series_remainder));
          break;
        }
        case Artifact::WGrid: {
          PhaseSpaceGrid g = wigner_from_characteristic(oracle->states[i], config.grid.x, config.grid.y);
          g.meta().time = t;
          emit(a, i, grid_text(g, config.format), g.meta().error_estimate);
          break;
        }
        case Artifact::Moments:
          emit(a, i, rows_text(t, moment_rows(mt), config.format), 0.0);
          break;
        case Artifact::MandelQ:
          emit(a, i, rows_text(t, {{"mandel_q", mandel_q(m0, bath, t)}}, config.format), 0.0);
          break;
        case Artifact::Variances:
          emit(a, i,
               rows_text(t, {{"var_x", mt.var_x}, {"var_y", mt.var_y}, {"product", mt.var_x * mt.var_y}},
                         config.format),
               0.0);
          break;
        case Artifact::OracleCompare: {
          const MomentSet mo = moments_from_rho(oracle->states[i]);
          std::vector<Comparison> rows;
          const Rows analytic = moment_rows(mt), numeric = moment_rows(mo);
          for (std::size_t k = 0; k < analytic.size(); ++k)
            rows.push_back({t, analytic[k].first, analytic[k].second, numeric[k].second});
          if (mt.mean_n > 0.0 && mo.mean_n > 0.0) {
            rows.push_back({t, "mandel_q", mandel_q(m0, bath, t), mandel_q_from_rho(oracle->states[i])});
          }
          for (const auto& c : rows) report.max_deviation = std::max(report.max_deviation, c.abs_diff());
          report.comparisons.insert(report.comparisons.end(), rows.begin(), rows.end());
          emit(a, i, comparison_text(t, rows, config.format), 0.0);
          break;
        }
      }
    }
  }

  const bool compared = config.wants(Artifact::OracleCompare);
  const bool passed = !compared || report.max_deviation <= kOracleTolerance;
  report.exit_code = passed ? kExitOk : kExitOracleMismatch;

  ordered_json manifest;
  manifest["library"] = "phasedamp";
  manifest["version"] = kVersion;
  ordered_json cfg;
  for (const auto& [k, v] : to_key_values(config)) cfg[k] = v;
  manifest["config"] = std::move(cfg);
  ordered_json files = ordered_json::array();
  for (const auto& f : report.files)
    files.push_back(
        {{"path", f.path}, {"artifact", artifact_name(f.artifact)}, {"time", f.time}, {"error_estimate", f.error_estimate}});
  manifest["files"] = std::move(files);
  if (oracle) {
    ordered_json o;
    o["cutoff"] = settings->cutoff();
    o["step"] = settings->step();
    o["steps"] = oracle->steps;
    o["max_trace_drift"] = oracle->max_trace_drift;
    o["min_eigenvalue"] = oracle->min_eigenvalue;
    ordered_json deficits = ordered_json::array();
    for (const auto& s : oracle->states) deficits.push_back(s.trace_deficit());
    o["trace_deficits"] = std::move(deficits);
    manifest["oracle"] = std::move(o);
  }
  if (compared) {
    manifest["oracle_compare"] = {
        {"tolerance", kOracleTolerance}, {"max_abs_deviation", report.max_deviation}, {"passed", passed}};
  }
  manifest["exit_code"] = report.exit_code;
  manifest["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  report.manifest_path = (dir / "manifest.json").string();
  write_text(report.manifest_path, manifest.dump(2) + "\n");
  return report;
}

namespace {

struct Parameter {
  const char* key;
  const char* description;
  const char* constraint;
};

struct CatalogEntry {
  StateFamily family;
  const char* alias;
  std::vector<Parameter> parameters;
  const char* closed_form;
  StateSpec example;
};

std::vector<CatalogEntry> catalog() {
  const Parameter beta_re{"beta_re", "real part of the displacement", "finite"};
  const Parameter beta_im{"beta_im", "imaginary part of the displacement", "finite"};
  return {
      {StateFamily::Coherent, "", {beta_re, beta_im}, "Gaussian kernel of width nbar_t around beta e^{-gamma t}",
       StateSpec::coherent({1.5, 0.0})},
      {StateFamily::Thermal, "", {{"mbar", "mean photon number", ">= 0"}},
       "Gaussian of width mbar e^{-2 gamma t} + nbar_t", StateSpec::thermal(1.0)},
      {StateFamily::PhotonAddedThermal, "pats", {{"mbar", "mean photon number of the thermal seed", "> 0"}},
       "photon-added thermal: quadratic polynomial times a Gaussian of width mbar e^{-2 gamma t} + nbar_t",
       StateSpec::photon_added_thermal(1.0)},
      {StateFamily::PhotonAddedCoherent, "pacs", {beta_re, beta_im},
       "photon-added coherent: |u alpha + v beta|^2 + v times a Gaussian of width nbar_t",
       StateSpec::photon_added_coherent({1.0, 0.5})},
      {StateFamily::SqueezedCoherent, "scs",
       {beta_re, beta_im, {"squeeze", "quadrature variance ratio s; var_x = 1/(4s), var_y = s/4", "> 0"}},
       "squeezed coherent: separable series of U(-n, 1/2, x) times a Gaussian of width nbar_t",
       StateSpec::squeezed_coherent({1.0, 0.0}, 1.5)},
      {StateFamily::DisplacedThermal, "",
       {beta_re, beta_im, {"mbar", "thermal occupation before displacement", ">= 0"}},
       "Gaussian of width mbar e^{-2 gamma t} + nbar_t around beta e^{-gamma t}",
       StateSpec::displaced_thermal({1.0, -0.5}, 0.5)},
  };
}

std::map<std::string, std::string> example_config(const StateSpec& spec) {
  auto kv = phasedamp::to_key_values(spec);
  kv["gamma"] = "0.5";
  kv["nbar"] = "1";
  kv["times"] = "0.5,1";
  kv["outputs"] = "moments,q-grid";
  return kv;
}

}  // namespace

void list_states(std::ostream& out, bool json) {
  const auto entries = catalog();
  if (json) {
    ordered_json list = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json params = ordered_json::array();
      for (const auto& p : e.parameters)
        params.push_back({{"key", p.key}, {"description", p.description}, {"constraint", p.constraint}});
      ordered_json example;
      for (const auto& [k, v] : example_config(e.example)) example[k] = v;
      list.push_back({{"family", family_name(e.family)},
                      {"alias", e.alias},
                      {"parameters", std::move(params)},
                      {"closed_form", e.closed_form},
                      {"example", std::move(example)}});
    }
    out << ordered_json{{"families", std::move(list)}}.dump(2) << "\n";
    return;
  }
  for (const auto& e : entries) {
    out << family_name(e.family);
    if (*e.alias) out << " (" << e.alias << ")";
    out << "\n  closed form: " << e.closed_form << "\n";
    for (const auto& p : e.parameters) {
      std::string flag = p.key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      out << "  --" << flag << "  " << p.description << " [" << p.constraint << "]\n";
    }
  }
}

}  // namespace phasedamp::cli
