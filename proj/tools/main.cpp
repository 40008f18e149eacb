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

// coupled-wells: scenario runner and regression front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coupled_wells/coupled_wells.h"
#include "scenario_config.hpp"
#include "scenario_runner.hpp"

namespace {

using namespace cwcli;

struct ScenarioArgs {
  std::string config;
  std::string out;
  std::string format = "csv";
};

int run_scenario_command(Scenario scenario, const ScenarioArgs& args) {
  std::ifstream file(args.config, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot read config " << args.config << "\n";
    return kExitIo;
  }
  std::ostringstream text;
  text << file.rdbuf();
  if (file.bad()) {
    std::cerr << "error: cannot read config " << args.config << "\n";
    return kExitIo;
  }

  try {
    const ResolvedConfig config = parse_config(text.str(), scenario);
    const Table table = cwcli::run_scenario(config);
    write_outputs(table, config, args.format == "json" ? OutputFormat::json : OutputFormat::csv, args.out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const RunError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  }
  return kExitOk;
}

struct RegressionArgs {
  double omega_ex_scale = 1.0;
  std::vector<int> criteria;
  bool skip_determinism = false;
  std::string out;
};

int run_regression_command(const RegressionArgs& args) {
  cw_report* report = nullptr;
  const cw_status status =
      cw_regression_run(args.omega_ex_scale, args.criteria.empty() ? nullptr : args.criteria.data(),
                        args.criteria.size(), args.skip_determinism ? 0 : 1, &report);
  if (status != CW_OK) {
    std::cerr << "error: " << cw_status_name(status) << ": " << cw_last_error_message() << "\n";
    return kExitFailure;
  }
  const std::string table = cw_report_format(report);
  const bool passed = cw_report_passed(report) != 0;
  cw_report_free(report);

  std::cout << table << (passed ? "overall: PASS\n" : "overall: FAIL\n");
  if (!args.out.empty()) {
    std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
    file << table;
    if (!file) {
      std::cerr << "error: cannot write " << args.out << "\n";
      return kExitIo;
    }
  }
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled motional modes of two ions in separate trapping wells"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cw_version()));

  const Scenario scenarios[] = {Scenario::coupling_calc, Scenario::modes_sweep, Scenario::thermal_exchange,
                                Scenario::single_quantum};
  const char* descriptions[] = {
      "exchange rate, exchange time, shielding factor and static shifts",
      "normal-mode frequencies across a detuning sweep",
      "<n_a>(tau) for thermal states exchanging with heating",
      "P(up_a)(tau) for the sideband-pulse single-quantum sequence",
  };
  ScenarioArgs scenario_args;
  std::vector<CLI::App*> scenario_commands;
  for (int i = 0; i < 4; ++i) {
    CLI::App* cmd = app.add_subcommand(scenario_name(scenarios[i]), descriptions[i]);
    cmd->add_option("--config", scenario_args.config, "key = value parameter file")->required();
    cmd->add_option("--out", scenario_args.out, "data file; metadata goes to <out>.meta.json")->required();
    cmd->add_option("--format", scenario_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    scenario_commands.push_back(cmd);
  }

  RegressionArgs regression_args;
  CLI::App* regression = app.add_subcommand("regression", "check the model against the published numbers");
  regression->add_option("--criteria", regression_args.criteria, "subset of criteria 1-7")
      ->check(CLI::Range(1, 7))
      ->delimiter(',');
  regression->add_flag("--skip-determinism", regression_args.skip_determinism, "run the suite once");
  regression->add_option("--omega-ex-scale", regression_args.omega_ex_scale,
                         "multiply every exchange rate (fault injection)")
      ->capture_default_str();
  regression->add_option("--out", regression_args.out, "also write the table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  for (int i = 0; i < 4; ++i) {
    if (scenario_commands[i]->parsed()) return run_scenario_command(scenarios[i], scenario_args);
  }
  return run_regression_command(regression_args);
}
