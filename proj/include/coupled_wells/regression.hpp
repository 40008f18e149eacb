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

#include <string>
#include <vector>

namespace cw {

enum class CheckKind {
  within,     // |computed - expected| <= tolerance
  at_most,    // computed <= tolerance
  less_than,  // computed < expected
};

struct RegressionCheck {
  int criterion = 0;
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  CheckKind kind = CheckKind::within;
  bool passed = false;
};

struct RegressionReport {
  std::vector<RegressionCheck> checks;

  [[nodiscard]] bool passed() const;
  /// Checks belonging to one criterion; all pass when it has none.
  [[nodiscard]] bool criterion_passed(int criterion) const;
  /// Fixed-width table, values at 12 significant digits. Contains no timing
  /// or host information, so identical runs give identical text.
  [[nodiscard]] std::string format() const;
};

struct RegressionOptions {
  // Multiplies every computed exchange rate; anything but 1 is fault injection.
  double omega_ex_scale = 1.0;
  // Criteria 1-7 to run; empty runs all of them.
  std::vector<int> criteria;
  // Runs the suite a second time and adds criterion 8 comparing the tables.
  bool check_determinism = false;
};

[[nodiscard]] RegressionReport run_regression(const RegressionOptions& options = {});

[[nodiscard]] const char* to_string(CheckKind kind);

}  // namespace cw
