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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "scenario_config.hpp"
#include "scenario_runner.hpp"

using namespace cwcli;

TEST_CASE("scenario names round trip") {
  for (Scenario s : {Scenario::coupling_calc, Scenario::modes_sweep, Scenario::thermal_exchange,
                     Scenario::single_quantum}) {
    CHECK(parse_scenario(scenario_name(s)) == s);
  }
  CHECK_THROWS_AS((void)parse_scenario("thermal"), ConfigError);
}

TEST_CASE("config parsing") {
  SUBCASE("defaults fill missing keys") {
    const auto c = parse_config("", Scenario::thermal_exchange);
    CHECK(c.real("separation_um") == 40.0);
    CHECK(c.real("freq_a_mhz") == 4.04);
    CHECK(c.integer("tau_count") == 121);
    CHECK(c.text("ramp") == "instantaneous");
    CHECK(parse_config("", Scenario::single_quantum).real("freq_b_mhz") == 5.56);
  }
  SUBCASE("comments, blanks and whitespace") {
    const auto c = parse_config("# header\n\n  nbar_a = 0.35   # cold\r\nshielding=off\nscenario = thermal-exchange\n",
                                Scenario::thermal_exchange);
    CHECK(c.real("nbar_a") == 0.35);
    CHECK_FALSE(c.boolean("shielding"));
  }
  SUBCASE("rejections name the key") {
    auto key_of = [](const char* text, Scenario s) {
      try {
        (void)parse_config(text, s);
      } catch (const ConfigError& e) {
        return e.key();
      }
      return std::string("<accepted>");
    };
    CHECK(key_of("separation = 40", Scenario::coupling_calc) == "separation");
    CHECK(key_of("pulse_error = 0.1", Scenario::thermal_exchange) == "pulse_error");
    CHECK(key_of("ramp = linear", Scenario::single_quantum) == "ramp");
    CHECK(key_of("nbar_a = 1\nnbar_a = 2", Scenario::thermal_exchange) == "nbar_a");
    CHECK(key_of("nbar_a = -1", Scenario::thermal_exchange) == "nbar_a");
    CHECK(key_of("nbar_a = 1x", Scenario::thermal_exchange) == "nbar_a");
    CHECK(key_of("tau_count = 2.5", Scenario::thermal_exchange) == "tau_count");
    CHECK(key_of("sweep_steps = 1", Scenario::modes_sweep) == "sweep_steps");
    CHECK(key_of("shielding = maybe", Scenario::coupling_calc) == "shielding");
    CHECK(key_of("ramp = cubic", Scenario::thermal_exchange) == "ramp");
    CHECK(key_of("pulse_error = 1", Scenario::single_quantum) == "pulse_error");
    CHECK(key_of("height_um = nan", Scenario::coupling_calc) == "height_um");
    CHECK(key_of("scenario = modes-sweep", Scenario::coupling_calc) == "scenario");
    CHECK(key_of("just words", Scenario::coupling_calc) == "line 1");
    CHECK(key_of("tau_start_us = 10\ntau_stop_us = 5", Scenario::thermal_exchange) == "tau_stop_us");
    CHECK(key_of("tau_count = 1\ntau_stop_us = 5", Scenario::thermal_exchange) == "tau_count");
  }
  SUBCASE("accepted keys differ per scenario") {
    const auto sq = accepted_keys(Scenario::single_quantum);
    CHECK(std::find(sq.begin(), sq.end(), "pulse_error") != sq.end());
    CHECK(std::find(sq.begin(), sq.end(), "ramp") == sq.end());
    CHECK(accepted_keys(Scenario::coupling_calc).size() == 9);
  }
}

TEST_CASE("coupling-calc table") {
  const auto c = parse_config("", Scenario::coupling_calc);
  const Table t = run_scenario(c);
  REQUIRE(t.rows.size() == 1);
  REQUIRE(t.columns.size() == t.rows[0].size());
  const auto col = [&](const char* name) {
    return t.rows[0][std::find(t.columns.begin(), t.columns.end(), name) - t.columns.begin()];
  };
  CHECK(col("tau_ex_us") == doctest::Approx(162.61152842687883).epsilon(1e-10));
  CHECK(col("splitting_hz") == doctest::Approx(3074.8129670810886).epsilon(1e-9));
  CHECK(col("static_shift_a_hz") == doctest::Approx(1510.1055050080588).epsilon(1e-9));
}

TEST_CASE("csv, json and metadata rendering") {
  const auto c = parse_config("sweep_steps = 3\nsweep_half_width_khz = 10", Scenario::modes_sweep);
  const Table t = run_scenario(c);
  const std::string csv = render_csv(t);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "detuning_hz,f_minus_hz,f_plus_hz,splitting_hz");
  std::string first;
  std::getline(lines, first);
  CHECK(first.rfind("-10000,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  const auto json = nlohmann::json::parse(render_json(t, c));
  CHECK(json["scenario"] == "modes-sweep");
  CHECK(json["rows"].size() == 3);
  CHECK(json["rows"][2][3].get<double>() == doctest::Approx(10460.933533562813).epsilon(1e-11));

  const auto meta = nlohmann::json::parse(render_metadata(t, c, OutputFormat::csv, "sweep.csv"));
  CHECK(meta["data_file"] == "sweep.csv");
  CHECK(meta["rows"] == 3);
  CHECK(meta["parameters"]["sweep_steps"] == 3);
  CHECK(meta["derived"].contains("tau_ex_us"));
  CHECK(meta["columns"] == json["columns"]);
}

TEST_CASE("twelve significant digits") {
  CHECK(format_number(162.61152842687883) == "162.611528427");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("physics failures map to exit code 3") {
  const auto c = parse_config("separation_um = 0.001", Scenario::coupling_calc);
  try {
    (void)run_scenario(c);
    FAIL("expected a RunError");
  } catch (const RunError& e) {
    CHECK(e.exit_code() == kExitPhysics);
  }
}
