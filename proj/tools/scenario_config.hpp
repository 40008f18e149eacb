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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cwcli {

enum class Scenario { coupling_calc, modes_sweep, thermal_exchange, single_quantum };

[[nodiscard]] const char* scenario_name(Scenario s);
/// Throws ConfigError for anything but the four scenario names.
[[nodiscard]] Scenario parse_scenario(std::string_view name);

/// Bad config text or value. key() names the offending key (or "line N").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  [[nodiscard]] const std::string& key() const { return key_; }

 private:
  std::string key_;
};

using Value = std::variant<double, long, bool, std::string>;

/// Every key the scenario accepts, in declaration order, with user values
/// or defaults filled in.
class ResolvedConfig {
 public:
  ResolvedConfig(Scenario scenario, std::vector<std::pair<std::string, Value>> entries)
      : scenario_(scenario), entries_(std::move(entries)) {}

  [[nodiscard]] Scenario scenario() const { return scenario_; }
  [[nodiscard]] const std::vector<std::pair<std::string, Value>>& entries() const { return entries_; }

  [[nodiscard]] double real(std::string_view key) const;
  [[nodiscard]] long integer(std::string_view key) const;
  [[nodiscard]] bool boolean(std::string_view key) const;
  [[nodiscard]] const std::string& text(std::string_view key) const;

 private:
  [[nodiscard]] const Value& at(std::string_view key) const;

  Scenario scenario_;
  std::vector<std::pair<std::string, Value>> entries_;
};

/// Parses `key = value` lines. Blank lines and text after '#' are ignored.
/// Unknown or repeated keys, malformed numbers and out-of-range values throw
/// ConfigError. An optional `scenario` key must match `scenario`.
[[nodiscard]] ResolvedConfig parse_config(std::string_view text, Scenario scenario);

/// Names of the keys accepted by a scenario, in declaration order.
[[nodiscard]] std::vector<std::string> accepted_keys(Scenario scenario);

}  // namespace cwcli
