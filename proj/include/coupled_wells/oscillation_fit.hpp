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

#include "coupled_wells/time_series.hpp"
#include "coupled_wells/units.hpp"

namespace cw {

/// Least-squares fit of y(t) = offset + amplitude cos(2 pi t / period + phase).
struct OscillationFit {
  Seconds period;
  double offset = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  double rms_residual = 0.0;
};

/// Scans periods in [min_period, max_period] on a log grid, solving the
/// linear part exactly at each, then refines the best bracket by golden
/// section. Needs at least four samples.
[[nodiscard]] OscillationFit fit_oscillation(const TimeSeries& series, Seconds min_period, Seconds max_period);

/// Search range from 2.5 mean sample spacings to twice the sampled span.
[[nodiscard]] OscillationFit fit_oscillation(const TimeSeries& series);

/// max - min of the values.
[[nodiscard]] double contrast(const TimeSeries& series);

}  // namespace cw
