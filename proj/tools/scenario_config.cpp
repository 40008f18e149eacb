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

#include "scenario_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <optional>

#include "coupled_wells/coupled_wells.h"

namespace cwcli {
namespace {

enum class Kind { real, integer, boolean, choice };

// Returns an error message, or nothing when the value is acceptable.
using Check = std::function<std::optional<std::string>(double)>;

struct KeyDef {
  std::string name;
  Kind kind;
  Value fallback;
  Check check;
  std::vector<std::string> choices;
};

Check positive() {
  return [](double v) -> std::optional<std::string> {
    if (v > 0.0) return std::nullopt;
    return "must be > 0";
  };
}
Check non_negative() {
  return [](double v) -> std::optional<std::string> {
    if (v >= 0.0) return std::nullopt;
    return "must be >= 0";
  };
}
Check non_zero() {
  return [](double v) -> std::optional<std::string> {
    if (v != 0.0) return std::nullopt;
    return "must be non-zero";
  };
}
Check at_least(double lo) {
  return [lo](double v) -> std::optional<std::string> {
    if (v >= lo) return std::nullopt;
    return "must be >= " + std::to_string(static_cast<long>(lo));
  };
}
Check half_open_unit() {
  return [](double v) -> std::optional<std::string> {
    if (v >= 0.0 && v < 1.0) return std::nullopt;
    return "must lie in [0, 1)";
  };
}
Check open_unit() {
  return [](double v) -> std::optional<std::string> {
    if (v > 0.0 && v < 1.0) return std::nullopt;
    return "must lie in (0, 1)";
  };
}

double beryllium_mass_u() {
  const cw_species be = cw_species_beryllium9();
  double mass_u = 0.0;
  cw_species_to_atomic(&be, &mass_u, nullptr);
  return mass_u;
}

std::vector<KeyDef> key_defs(Scenario scenario) {
  const bool single = scenario == Scenario::single_quantum;
  const double freq = single ? 5.56 : 4.04;
  std::vector<KeyDef> keys = {
      {"separation_um", Kind::real, 40.0, positive(), {}},
      {"height_um", Kind::real, 40.0, positive(), {}},
      {"freq_a_mhz", Kind::real, freq, positive(), {}},
      {"freq_b_mhz", Kind::real, freq, positive(), {}},
      {"shielding", Kind::boolean, true, {}, {}},
      {"mass_a_u", Kind::real, beryllium_mass_u(), positive(), {}},
      {"charge_a_e", Kind::real, 1.0, non_zero(), {}},
      {"mass_b_u", Kind::real, beryllium_mass_u(), positive(), {}},
      {"charge_b_e", Kind::real, 1.0, non_zero(), {}},
  };
  auto add = [&keys](KeyDef k) { keys.push_back(std::move(k)); };

  switch (scenario) {
    case Scenario::coupling_calc:
      break;
    case Scenario::modes_sweep:
      add({"sweep_half_width_khz", Kind::real, 20.0, non_negative(), {}});
      add({"sweep_steps", Kind::integer, 401L, at_least(2), {}});
      break;
    case Scenario::thermal_exchange:
    case Scenario::single_quantum:
      add({"ndot_a_per_s", Kind::real, 0.0, non_negative(), {}});
      add({"ndot_b_per_s", Kind::real, 0.0, non_negative(), {}});
      add({"nbar_a", Kind::real, 0.0, non_negative(), {}});
      add({"nbar_b", Kind::real, 0.0, non_negative(), {}});
      add({"tau_start_us", Kind::real, 0.0, non_negative(), {}});
      add({"tau_stop_us", Kind::real, single ? 900.0 : 600.0, non_negative(), {}});
      add({"tau_count", Kind::integer, single ? 81L : 121L, at_least(1), {}});
      add({"tail_tol", Kind::real, 1e-6, open_unit(), {}});
      add({"dt_us", Kind::real, 0.0, non_negative(), {}});
      add({"headroom", Kind::integer, 3L, at_least(0), {}});
      if (single) {
        add({"pulse_error", Kind::real, 0.0, half_open_unit(), {}});
      } else {
        add({"ramp", Kind::choice, std::string("instantaneous"), {}, {"instantaneous", "linear"}});
        add({"ramp_time_us", Kind::real, 9.0, positive(), {}});
        add({"ramp_start_detuning_khz", Kind::real, 100.0, {}, {}});
        add({"ramp_segments", Kind::integer, 90L, at_least(1), {}});
      }
      break;
  }
  return keys;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Value parse_value(const KeyDef& def, std::string_view raw) {
  const std::string text(raw);
  switch (def.kind) {
    case Kind::real: {
      double v = 0.0;
      const auto [end, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
      if (ec != std::errc() || end != raw.data() + raw.size() || !std::isfinite(v)) {
        throw ConfigError(def.name, "expected a finite number, got '" + text + "'");
      }
      if (def.check) {
        if (auto err = def.check(v)) throw ConfigError(def.name, *err + ", got " + text);
      }
      return v;
    }
    case Kind::integer: {
      long v = 0;
      const auto [end, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
      if (ec != std::errc() || end != raw.data() + raw.size()) {
        throw ConfigError(def.name, "expected an integer, got '" + text + "'");
      }
      if (def.check) {
        if (auto err = def.check(static_cast<double>(v))) throw ConfigError(def.name, *err + ", got " + text);
      }
      return v;
    }
    case Kind::boolean:
      if (text == "true" || text == "on" || text == "yes" || text == "1") return true;
      if (text == "false" || text == "off" || text == "no" || text == "0") return false;
      throw ConfigError(def.name, "expected true or false, got '" + text + "'");
    case Kind::choice:
      if (std::find(def.choices.begin(), def.choices.end(), text) != def.choices.end()) return text;
      {
        std::string allowed;
        for (const auto& c : def.choices) allowed += (allowed.empty() ? "" : ", ") + c;
        throw ConfigError(def.name, "expected one of {" + allowed + "}, got '" + text + "'");
      }
  }
  throw ConfigError(def.name, "unsupported value kind");
}

}  // namespace

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::coupling_calc:
      return "coupling-calc";
    case Scenario::modes_sweep:
      return "modes-sweep";
    case Scenario::thermal_exchange:
      return "thermal-exchange";
    case Scenario::single_quantum:
      return "single-quantum";
  }
  return "?";
}

Scenario parse_scenario(std::string_view name) {
  for (Scenario s : {Scenario::coupling_calc, Scenario::modes_sweep, Scenario::thermal_exchange,
                     Scenario::single_quantum}) {
    if (name == scenario_name(s)) return s;
  }
  throw ConfigError("scenario", "unknown scenario '" + std::string(name) + "'");
}

const Value& ResolvedConfig::at(std::string_view key) const {
  for (const auto& [name, value] : entries_) {
    if (name == key) return value;
  }
  throw std::logic_error("config key not defined for this scenario: " + std::string(key));
}

double ResolvedConfig::real(std::string_view key) const { return std::get<double>(at(key)); }
long ResolvedConfig::integer(std::string_view key) const { return std::get<long>(at(key)); }
bool ResolvedConfig::boolean(std::string_view key) const { return std::get<bool>(at(key)); }
const std::string& ResolvedConfig::text(std::string_view key) const { return std::get<std::string>(at(key)); }

std::vector<std::string> accepted_keys(Scenario scenario) {
  std::vector<std::string> out;
  for (const auto& k : key_defs(scenario)) out.push_back(k.name);
  return out;
}

ResolvedConfig parse_config(std::string_view text, Scenario scenario) {
  const auto defs = key_defs(scenario);
  std::map<std::string, Value, std::less<>> given;

  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view raw = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no), "missing key before '='");
    if (raw.empty()) throw ConfigError(key, "missing value");

    if (key == "scenario") {
      if (raw != scenario_name(scenario)) {
        throw ConfigError(key, "config is for '" + std::string(raw) + "' but the command runs '" +
                                   scenario_name(scenario) + "'");
      }
      continue;
    }
    const auto def = std::find_if(defs.begin(), defs.end(), [&](const KeyDef& s) { return s.name == key; });
    if (def == defs.end()) {
      throw ConfigError(key, std::string("unknown key for scenario ") + scenario_name(scenario));
    }
    if (given.contains(key)) throw ConfigError(key, "given more than once");
    given.emplace(key, parse_value(*def, raw));
  }

  std::vector<std::pair<std::string, Value>> entries;
  entries.reserve(defs.size());
  for (const auto& def : defs) {
    const auto it = given.find(def.name);
    entries.emplace_back(def.name, it != given.end() ? it->second : def.fallback);
  }
  ResolvedConfig resolved(scenario, std::move(entries));

  if (scenario == Scenario::thermal_exchange || scenario == Scenario::single_quantum) {
    if (resolved.real("tau_stop_us") < resolved.real("tau_start_us")) {
      throw ConfigError("tau_stop_us", "must be >= tau_start_us");
    }
    if (resolved.integer("tau_count") == 1 && resolved.real("tau_stop_us") != resolved.real("tau_start_us")) {
      throw ConfigError("tau_count", "a single point needs tau_stop_us == tau_start_us");
    }
  }
  return resolved;
}

}  // namespace cwcli
