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

#include <optional>
#include <string>
#include <vector>

#include "coupled_wells/units.hpp"

namespace cw {

/// Ordered samples of one dimensionless observable.
struct TimeSeries {
  std::string label;
  std::vector<Seconds> times;
  std::vector<double> values;
  std::optional<std::vector<double>> uncertainties;

  [[nodiscard]] std::size_t size() const { return times.size(); }
};

}  // namespace cw
