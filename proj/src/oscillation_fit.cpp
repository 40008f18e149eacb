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

#include "coupled_wells/oscillation_fit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "coupled_wells/errors.hpp"

namespace cw {
namespace {

struct LinearFit {
  Eigen::Vector3d coeffs;
  double ssr;
};

// Fixed period: y ~ c0 + c1 cos(wt) + c2 sin(wt).
LinearFit solve_fixed_period(const TimeSeries& series, double period) {
  const double w = 2.0 * std::numbers::pi / period;
  Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
  Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double t = series.times[i].value();
    const Eigen::Vector3d row(1.0, std::cos(w * t), std::sin(w * t));
    normal += row * row.transpose();
    rhs += row * series.values[i];
  }
  const Eigen::Vector3d c = normal.ldlt().solve(rhs);
  double ssr = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double t = series.times[i].value();
    const double r = series.values[i] - (c(0) + c(1) * std::cos(w * t) + c(2) * std::sin(w * t));
    ssr += r * r;
  }
  return {c, ssr};
}

}  // namespace

OscillationFit fit_oscillation(const TimeSeries& series, Seconds min_period, Seconds max_period) {
  if (series.size() < 4 || series.values.size() != series.size()) throw DomainError("fit needs at least four samples");
  if (!(min_period.value() > 0.0) || !(max_period > min_period)) throw DomainError("invalid period search range");

  constexpr int kGrid = 4000;
  const double log_lo = std::log(min_period.value());
  const double log_step = (std::log(max_period.value()) - log_lo) / (kGrid - 1);
  auto period_at = [&](int k) { return std::exp(log_lo + log_step * k); };

  int best = 0;
  double best_ssr = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kGrid; ++k) {
    const double ssr = solve_fixed_period(series, period_at(k)).ssr;
    if (ssr < best_ssr) {
      best_ssr = ssr;
      best = k;
    }
  }

  // golden section on [k-1, k+1]
  double lo = std::log(period_at(std::max(0, best - 1)));
  double hi = std::log(period_at(std::min(kGrid - 1, best + 1)));
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  auto cost = [&](double log_period) { return solve_fixed_period(series, std::exp(log_period)).ssr; };
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = cost(x1);
  double f2 = cost(x2);
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = cost(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = cost(x2);
    }
  }

  const double period = std::exp(0.5 * (lo + hi));
  const LinearFit fit = solve_fixed_period(series, period);
  OscillationFit out;
  out.period = Seconds(period);
  out.offset = fit.coeffs(0);
  out.amplitude = std::hypot(fit.coeffs(1), fit.coeffs(2));
  // c1 cos + c2 sin = A cos(wt + phase) with phase = atan2(-c2, c1)
  out.phase = std::atan2(-fit.coeffs(2), fit.coeffs(1));
  out.rms_residual = std::sqrt(fit.ssr / static_cast<double>(series.size()));
  return out;
}

OscillationFit fit_oscillation(const TimeSeries& series) {
  if (series.size() < 4) throw DomainError("fit needs at least four samples");
  const double span = (series.times.back() - series.times.front()).value();
  const double spacing = span / static_cast<double>(series.size() - 1);
  return fit_oscillation(series, Seconds(2.5 * spacing), Seconds(2.0 * span));
}

double contrast(const TimeSeries& series) {
  if (series.values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(series.values.begin(), series.values.end());
  return *hi - *lo;
}

}  // namespace cw
