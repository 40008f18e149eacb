// Copyright 2026 The coupled-wells Authors
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

#include "scenario_runner.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>

#include "coupled_wells/coupled_wells.h"
#include "json.hpp"

namespace cwcli {
namespace {

using ordered_json = nlohmann::ordered_json;

int exit_code_for(cw_status status) {
  switch (status) {
    case CW_OK:
      return kExitOk;
    case CW_ERR_DOMAIN:
    case CW_ERR_INSTABILITY:
    case CW_ERR_TRUNCATION:
    case CW_ERR_STEP_SIZE:
      return kExitPhysics;
    case CW_ERR_IO:
      return kExitIo;
    case CW_ERR_INVALID_ARGUMENT:
    case CW_ERR_INTERNAL:
      break;
  }
  return kExitFailure;
}

void check(cw_status status) {
  if (status == CW_OK) return;
  std::string message = std::string(cw_status_name(status)) + ": " + cw_last_error_message();
  if (status == CW_ERR_TRUNCATION && cw_last_error_required_dimension() > 0) {
    message += " (try headroom so the dimension reaches " + std::to_string(cw_last_error_required_dimension()) + ")";
  }
  throw RunError(exit_code_for(status), message);
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using SweepPtr = std::unique_ptr<cw_sweep, Deleter<cw_sweep, cw_sweep_free>>;
using SeriesPtr = std::unique_ptr<cw_series, Deleter<cw_series, cw_series_free>>;

cw_trap_config trap_of(const ResolvedConfig& c) {
  return {c.real("separation_um") * 1e-6, c.real("height_um") * 1e-6, c.real("freq_a_mhz") * 1e6,
          c.real("freq_b_mhz") * 1e6, c.boolean("shielding") ? 1 : 0};
}

cw_species species_of(const ResolvedConfig& c, char which) {
  const std::string s(1, which);
  return cw_species_from_atomic(c.real("mass_" + s + "_u"), c.real("charge_" + s + "_e"));
}

std::vector<double> tau_grid(const ResolvedConfig& c) {
  const double start = c.real("tau_start_us") * 1e-6;
  const double stop = c.real("tau_stop_us") * 1e-6;
  const long n = c.integer("tau_count");
  std::vector<double> taus;
  taus.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    taus.push_back(n == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return taus;
}

void add_coupling(Table& table, const cw_trap_config& trap, const cw_species& a, const cw_species& b) {
  cw_coupling c{};
  check(cw_coupling_params(&trap, &a, &b, &c));
  table.derived.emplace_back("beta", c.beta);
  table.derived.emplace_back("kappa_n_per_m", c.kappa_n_per_m);
  table.derived.emplace_back("omega_ex_rad_s", c.omega_ex_rad_s);
  table.derived.emplace_back("tau_ex_us", c.tau_ex_s * 1e6);
}

Table coupling_calc(const ResolvedConfig& c) {
  const auto trap = trap_of(c);
  const auto a = species_of(c, 'a');
  const auto b = species_of(c, 'b');
  cw_coupling cp{};
  check(cw_coupling_params(&trap, &a, &b, &cp));
  double shift_a = 0.0;
  double shift_b = 0.0;
  check(cw_static_frequency_shift(&trap, &a, &b, &shift_a, &shift_b));
  cw_mode_spectrum modes{};
  check(cw_normal_modes(&trap, &a, &b, &modes));

  Table t;
  t.columns = {"kappa_n_per_m", "beta",           "omega_ex_rad_s",    "exchange_rate_hz", "tau_ex_us",
               "static_shift_a_hz", "static_shift_b_hz", "f_minus_hz", "f_plus_hz",        "splitting_hz"};
  t.rows.push_back({cp.kappa_n_per_m, cp.beta, cp.omega_ex_rad_s, cp.omega_ex_rad_s / (2.0 * std::numbers::pi),
                    cp.tau_ex_s * 1e6, shift_a, shift_b, modes.f_minus_hz, modes.f_plus_hz, modes.splitting_hz});
  return t;
}

Table modes_sweep(const ResolvedConfig& c) {
  const auto trap = trap_of(c);
  const auto a = species_of(c, 'a');
  const auto b = species_of(c, 'b');
  cw_sweep* raw = nullptr;
  check(cw_sweep_run(&trap, &a, &b, c.real("sweep_half_width_khz") * 1e3, static_cast<int>(c.integer("sweep_steps")),
                     &raw));
  const SweepPtr sweep(raw);

  Table t;
  t.columns = {"detuning_hz", "f_minus_hz", "f_plus_hz", "splitting_hz"};
  for (std::size_t i = 0; i < cw_sweep_size(sweep.get()); ++i) {
    double detuning = 0.0;
    cw_mode_spectrum m{};
    check(cw_sweep_point(sweep.get(), i, &detuning, &m));
    t.rows.push_back({detuning, m.f_minus_hz, m.f_plus_hz, m.splitting_hz});
  }
  add_coupling(t, trap, a, b);
  return t;
}

Table dynamics(const ResolvedConfig& c) {
  const bool single = c.scenario() == Scenario::single_quantum;
  const std::vector<double> taus = tau_grid(c);

  cw_experiment_plan plan;
  cw_experiment_plan_init(&plan);
  plan.trap = trap_of(c);
  plan.species_a = species_of(c, 'a');
  plan.species_b = species_of(c, 'b');
  plan.ndot_a = c.real("ndot_a_per_s");
  plan.ndot_b = c.real("ndot_b_per_s");
  plan.nbar_a = c.real("nbar_a");
  plan.nbar_b = c.real("nbar_b");
  plan.taus_s = taus.data();
  plan.n_taus = taus.size();
  plan.tail_tol = c.real("tail_tol");
  plan.dt_s = c.real("dt_us") * 1e-6;
  plan.headroom = static_cast<int>(c.integer("headroom"));
  if (single) {
    plan.pulse_error = c.real("pulse_error");
  } else {
    plan.ramp = c.text("ramp") == "linear" ? CW_RAMP_LINEAR : CW_RAMP_INSTANTANEOUS;
    plan.ramp_time_s = c.real("ramp_time_us") * 1e-6;
    plan.ramp_start_detuning_hz = c.real("ramp_start_detuning_khz") * 1e3;
    plan.ramp_segments = static_cast<int>(c.integer("ramp_segments"));
  }

  int dim = 0;
  check(cw_plan_fock_dimension(&plan, single ? 1 : 0, &dim));
  cw_series* raw = nullptr;
  check(single ? cw_single_quantum(&plan, &raw) : cw_thermal_exchange(&plan, &raw));
  const SeriesPtr series(raw);

  Table t;
  t.columns = {"tau_s", single ? "p_up_a" : "n_a_mean"};
  const double* times = cw_series_times(series.get());
  const double* values = cw_series_values(series.get());
  for (std::size_t i = 0; i < cw_series_size(series.get()); ++i) t.rows.push_back({times[i], values[i]});

  add_coupling(t, plan.trap, plan.species_a, plan.species_b);
  t.derived.emplace_back("detuning_hz", plan.trap.freq_a_hz - plan.trap.freq_b_hz);
  t.derived.emplace_back("fock_dimension_per_mode", dim);
  return t;
}

double rounded(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

ordered_json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return rounded(x);
        } else {
          return x;
        }
      },
      v);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw RunError(kExitIo, "cannot open " + path + " for writing");
  file << content;
  file.flush();
  if (!file) throw RunError(kExitIo, "write to " + path + " failed");
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Table run_scenario(const ResolvedConfig& config) {
  switch (config.scenario()) {
    case Scenario::coupling_calc:
      return coupling_calc(config);
    case Scenario::modes_sweep:
      return modes_sweep(config);
    case Scenario::thermal_exchange:
    case Scenario::single_quantum:
      return dynamics(config);
  }
  throw RunError(kExitFailure, "unhandled scenario");
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i ? "," : "") + table.columns[i];
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table, const ResolvedConfig& config) {
  ordered_json doc;
  doc["scenario"] = scenario_name(config.scenario());
  doc["columns"] = table.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r = ordered_json::array();
    for (double v : row) r.push_back(rounded(v));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string render_metadata(const Table& table, const ResolvedConfig& config, OutputFormat format,
                            const std::string& data_file) {
  ordered_json doc;
  doc["scenario"] = scenario_name(config.scenario());
  doc["data_file"] = data_file;
  doc["format"] = format == OutputFormat::csv ? "csv" : "json";
  doc["columns"] = table.columns;
  doc["rows"] = table.rows.size();
  doc["library_version"] = cw_version();
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : config.entries()) params[key] = to_json(value);
  doc["parameters"] = std::move(params);
  ordered_json derived = ordered_json::object();
  for (const auto& [key, value] : table.derived) derived[key] = rounded(value);
  doc["derived"] = std::move(derived);
  return doc.dump(2) + "\n";
}

void write_outputs(const Table& table, const ResolvedConfig& config, OutputFormat format, const std::string& out) {
  const std::string data_file = std::filesystem::path(out).filename().string();
  write_file(out, format == OutputFormat::csv ? render_csv(table) : render_json(table, config));
  write_file(out + ".meta.json", render_metadata(table, config, format, data_file));
}

}  // namespace cwcli
