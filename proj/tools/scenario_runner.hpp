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
#include <utility>
#include <vector>

#include "scenario_config.hpp"

namespace cwcli {

enum class OutputFormat { csv, json };

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitPhysics = 3,
  kExitIo = 4,
};

/// Failure while running a scenario, carrying the process exit code.
class RunError : public std::runtime_error {
 public:
  RunError(int exit_code, const std::string& message) : std::runtime_error(message), exit_code_(exit_code) {}
  [[nodiscard]] int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

/// Tabular scenario result.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> derived;  // echoed in the metadata
};

/// Runs the scenario through the C API. Throws RunError.
[[nodiscard]] Table run_scenario(const ResolvedConfig& config);

/// %.12g
[[nodiscard]] std::string format_number(double v);

[[nodiscard]] std::string render_csv(const Table& table);
[[nodiscard]] std::string render_json(const Table& table, const ResolvedConfig& config);
/// Resolved parameters, column schema and derived quantities.
[[nodiscard]] std::string render_metadata(const Table& table, const ResolvedConfig& config, OutputFormat format,
                                          const std::string& data_file);

/// Writes `<out>` and `<out>.meta.json`. Throws RunError(kExitIo) on failure.
void write_outputs(const Table& table, const ResolvedConfig& config, OutputFormat format, const std::string& out);

}  // namespace cwcli
