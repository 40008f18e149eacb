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

#include <cmath>
#include <numbers>

#include "coupled_wells/errors.hpp"
#include "coupled_wells/oscillation_fit.hpp"
#include "doctest.h"

using namespace cw;

namespace {

TimeSeries cosine(double period, double offset, double amplitude, double phase, int n, double span) {
  TimeSeries s;
  for (int i = 0; i < n; ++i) {
    const double t = span * i / (n - 1);
    s.times.emplace_back(t);
    s.values.push_back(offset + amplitude * std::cos(2 * std::numbers::pi * t / period + phase));
  }
  return s;
}

}  // namespace

TEST_CASE("recovers an exact sinusoid") {
  const TimeSeries s = cosine(447.58e-6, 0.5, -0.5, 0.0, 81, 650e-6);
  const OscillationFit fit = fit_oscillation(s);
  CHECK(fit.period.value() == doctest::Approx(447.58e-6).epsilon(1e-7));
  CHECK(fit.offset == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(std::abs(fit.amplitude) == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(fit.rms_residual < 1e-7);
}

TEST_CASE("phase and period with sparse sampling") {
  const TimeSeries s = cosine(3.0, 1.0, 2.0, 0.7, 17, 10.0);
  const OscillationFit fit = fit_oscillation(s, Seconds(1.0), Seconds(10.0));
  CHECK(fit.period.value() == doctest::Approx(3.0).epsilon(1e-6));
  // y = offset + A cos(...) is invariant under (A, phase) -> (-A, phase + pi)
  const double folded = std::remainder(fit.phase - 0.7 + (fit.amplitude < 0 ? std::numbers::pi : 0.0),
                                       2 * std::numbers::pi);
  CHECK(std::abs(folded) < 1e-5);
}

TEST_CASE("tolerates noise") {
  TimeSeries s = cosine(100.0, 0.0, 1.0, 0.3, 200, 500.0);
  std::uint32_t state = 12345;
  for (double& v : s.values) {
    state = state * 1664525u + 1013904223u;
    v += 0.05 * (static_cast<double>(state) / 4294967296.0 - 0.5);
  }
  const OscillationFit fit = fit_oscillation(s);
  CHECK(fit.period.value() == doctest::Approx(100.0).epsilon(2e-3));
  CHECK(fit.rms_residual < 0.02);
}

TEST_CASE("input validation and contrast") {
  TimeSeries few = cosine(1.0, 0.0, 1.0, 0.0, 3, 1.0);
  CHECK_THROWS_AS((void)fit_oscillation(few), DomainError);
  const TimeSeries s = cosine(1.0, 0.0, 1.0, 0.0, 9, 1.0);
  CHECK_THROWS_AS((void)fit_oscillation(s, Seconds(2.0), Seconds(1.0)), DomainError);
  CHECK(contrast(s) == doctest::Approx(2.0));
  CHECK(contrast(TimeSeries{}) == 0.0);
}
