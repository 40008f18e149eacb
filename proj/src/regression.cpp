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

#include "coupled_wells/regression.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>

#include "coupled_wells/core_model.hpp"
#include "coupled_wells/dynamics.hpp"
#include "coupled_wells/normal_modes.hpp"
#include "coupled_wells/oscillation_fit.hpp"
#include "coupled_wells/protocol.hpp"

namespace cw {
namespace {

constexpr double kMeasuredHeating = 1885.0;  // quanta/s, thermal exchange data
constexpr double kLowHeating = 500.0;        // quanta/s, low end for the 4-5.6 MHz wells
constexpr double kDegradedNbarB = 0.6;
constexpr double kDegradedPulseError = 0.05;
constexpr int kSingleQuantumPoints = 81;

class Suite {
 public:
  explicit Suite(const RegressionOptions& options) : options_(options) {}

  RegressionReport run() {
    const std::function<void(Suite&)> criteria[] = {
        &Suite::exchange_time_check, &Suite::shielding_check, &Suite::crossing_check,  &Suite::langevin_check,
        &Suite::ideal_single_quantum, &Suite::degraded_single_quantum, &Suite::physicality,
    };
    for (int c = 1; c <= 7; ++c) {
      if (!options_.criteria.empty() &&
          std::find(options_.criteria.begin(), options_.criteria.end(), c) == options_.criteria.end()) {
        continue;
      }
      current_ = c;
      try {
        criteria[c - 1](*this);
      } catch (const std::exception& e) {
        add_failure(std::string("error: ") + e.what());
      }
    }
    return std::move(report_);
  }

 private:
  const IonSpecies be_ = IonSpecies::beryllium9();

  static TrapConfig trap_at(double freq_mhz) {
    return TrapConfig(micrometers(40.0), micrometers(40.0), megahertz(freq_mhz), megahertz(freq_mhz));
  }

  RadiansPerSecond omega(const TrapConfig& trap) const {
    return exchange_rate(trap, be_, be_) * options_.omega_ex_scale;
  }

  void within(const std::string& name, double expected, double computed, double tolerance) {
    push(name, expected, computed, tolerance, CheckKind::within, std::abs(computed - expected) <= tolerance);
  }
  void at_most(const std::string& name, double computed, double tolerance) {
    push(name, 0.0, computed, tolerance, CheckKind::at_most, computed <= tolerance);
  }
  void less_than(const std::string& name, double bound, double computed) {
    push(name, bound, computed, 0.0, CheckKind::less_than, computed < bound);
  }
  void add_failure(const std::string& name) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    push(name, nan, nan, nan, CheckKind::within, false);
  }
  void push(const std::string& name, double expected, double computed, double tolerance, CheckKind kind, bool ok) {
    report_.checks.push_back({current_, name, expected, computed, tolerance, kind, ok && std::isfinite(computed)});
  }

  // 1
  void exchange_time_check() {
    const double tau_us = exchange_time(omega(trap_at(4.04))).value() * 1e6;
    within("tau_ex_us", 162.0, tau_us, 1.62);
  }

  // 2
  void shielding_check() {
    const Meters height = micrometers(40.0);
    within("beta_at_s0_eq_d0", 1.018, shielding_factor(height, height), 0.001);

    constexpr int kPoints = 20001;
    const double log_step = 4.0 / (kPoints - 1);
    int best = 0;
    double best_beta = -1.0;
    for (int k = 0; k < kPoints; ++k) {
      const double r = std::pow(10.0, -2.0 + log_step * k);
      const double beta = shielding_factor(height * r, height);
      if (beta > best_beta) {
        best_beta = beta;
        best = k;
      }
    }
    within("beta_argmax_r", 1.0, std::pow(10.0, -2.0 + log_step * best), std::pow(10.0, log_step) - 1.0);
  }

  // 3
  void crossing_check() {
    const TrapConfig trap = trap_at(4.04);
    const CrossingSweep sweep = avoided_crossing_sweep(trap, be_, be_, kilohertz(20.0), 401);
    std::size_t best = 0;
    for (std::size_t i = 1; i < sweep.spectra.size(); ++i) {
      if (sweep.spectra[i].splitting < sweep.spectra[best].splitting) best = i;
    }
    const double min_khz = sweep.spectra[best].splitting.value() * 1e-3;
    within("min_splitting_khz", 3.1, min_khz, 0.062);
    within("min_splitting_detuning_hz", 0.0, sweep.detunings[best].value(), 50.0);
    const double predicted_khz = omega(trap).value() / std::numbers::pi * 1e-3;
    within("min_splitting_vs_omega_ex_over_pi_khz", predicted_khz, min_khz, 0.005 * predicted_khz);
  }

  // 4
  void langevin_check() {
    const TrapConfig trap = trap_at(4.04);
    const RadiansPerSecond w = omega(trap);
    const Seconds tau_ex = exchange_time(w);
    ExperimentPlan plan{trap, be_, be_, {QuantaPerSecond(kMeasuredHeating), QuantaPerSecond(kMeasuredHeating)}, 0.35, 2.3,
                        {}};
    for (int i = 0; i <= 600; ++i) plan.taus.push_back(microseconds(i));
    plan.taus.insert(std::upper_bound(plan.taus.begin(), plan.taus.end(), tau_ex), tau_ex);

    const TimeSeries sim = thermal_exchange_experiment(plan, w);
    const TimeSeries oracle = closed_form_exchange(0.35, 2.3, w, plan.heating.mean(), plan.taus);
    double worst = 0.0;
    double at_tau_ex = 0.0;
    for (std::size_t i = 0; i < sim.size(); ++i) {
      worst = std::max(worst, std::abs(sim.values[i] - oracle.values[i]));
      if (sim.times[i] == tau_ex) at_tau_ex = sim.values[i];
    }
    at_most("max_abs_deviation_from_closed_form", worst, 1e-3);
    within("n_a_at_tau_ex", 2.3 + kMeasuredHeating * tau_ex.value(), at_tau_ex, 1e-3);

    auto first_maximum_us = [](const TimeSeries& s) {
      for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s.values[i] >= s.values[i - 1] && s.values[i] > s.values[i + 1]) return s.times[i].value() * 1e6;
      }
      return std::numeric_limits<double>::quiet_NaN();
    };
    const double first_max = first_maximum_us(sim);
    // heating tilts the curve and moves the peak a few percent past tau_ex
    within("first_maximum_us_vs_tau_ex", tau_ex.value() * 1e6, first_max, 0.05 * tau_ex.value() * 1e6);
    within("first_maximum_us_vs_closed_form", first_maximum_us(oracle), first_max, 1.0);
  }

  ExperimentPlan single_quantum_plan(const TrapConfig& trap, RadiansPerSecond w) const {
    ExperimentPlan plan{trap, be_, be_, {}, 0.0, 0.0, {}};
    const double span = 4.0 * exchange_time(w).value();
    for (int i = 0; i < kSingleQuantumPoints; ++i) {
      plan.taus.emplace_back(span * i / (kSingleQuantumPoints - 1));
    }
    return plan;
  }

  // 5
  void ideal_single_quantum() {
    const TrapConfig trap = trap_at(5.56);
    const RadiansPerSecond w = omega(trap);
    const TimeSeries series = single_quantum_experiment(single_quantum_plan(trap, w), w);
    double worst = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
      const double s = std::sin(w.value() * series.times[i].value());
      worst = std::max(worst, std::abs(series.values[i] - s * s));
    }
    at_most("max_abs_deviation_from_sin2", worst, 1e-6);
    within("fitted_period_us", 447.0, fit_oscillation(series).period.value() * 1e6, 4.47);
    ideal_contrast_ = contrast(series);
  }

  // 6
  void degraded_single_quantum() {
    const TrapConfig trap = trap_at(5.56);
    const RadiansPerSecond w = omega(trap);
    if (!std::isfinite(ideal_contrast_)) {
      ideal_contrast_ = contrast(single_quantum_experiment(single_quantum_plan(trap, w), w));
    }
    ExperimentPlan plan = single_quantum_plan(trap, w);
    plan.nbar_b = kDegradedNbarB;
    plan.heating = {QuantaPerSecond(kLowHeating), QuantaPerSecond(kLowHeating)};
    plan.pulse_error = kDegradedPulseError;
    const TimeSeries series = single_quantum_experiment(plan, w);
    less_than("contrast_below_ideal", ideal_contrast_, contrast(series));
    const double two_tau_ex = 2.0 * exchange_time(w).value();
    at_most("fitted_period_relative_shift", std::abs(fit_oscillation(series).period.value() / two_tau_ex - 1.0), 0.03);
  }

  // 7
  void physicality() {
    const TrapConfig trap = trap_at(4.04);
    const RadiansPerSecond w = omega(trap);
    const Seconds tau_ex = exchange_time(w);
    const RadiansPerSecond detuning = to_angular(kilohertz(3.0));
    const HeatingModel heating{QuantaPerSecond(kMeasuredHeating), QuantaPerSecond(kMeasuredHeating)};
    const double tail_tol = 1e-6;

    auto space_for = [&](double peak) {
      const int dim = FockSpace::required_dimension(peak, tail_tol) + 3;
      return FockSpace(dim, dim);
    };
    auto grid = [](Seconds end, Seconds step) {
      std::vector<Seconds> out;
      const long n = std::lround(end / step);
      for (long i = 0; i <= n; ++i) out.push_back(end * (static_cast<double>(i) / static_cast<double>(n)));
      return out;
    };

    // detuned, heated trajectory
    {
      const FockSpace space = space_for(2.3 + kMeasuredHeating * 2.0 * tau_ex.value());
      EvolveStats stats;
      EvolveOptions options;
      options.stats = &stats;
      double herm = 0.0;
      double negative = 0.0;
      double trace_error = 0.0;
      evolve_sampled(
          DensityOperator::thermal(space, 0.35, 2.3), {w, detuning}, heating, grid(tau_ex * 2.0, microseconds(25.0)),
          [&](Seconds, const DensityOperator& rho) {
            herm = std::max(herm, rho.hermiticity_defect());
            negative = std::max(negative, -rho.min_eigenvalue());
            trace_error = std::max(trace_error, std::abs(rho.trace() - Complex(1.0, 0.0)));
          },
          options);
      at_most("max_step_trace_drift", stats.max_trace_drift, 1e-8);
      at_most("max_trace_error", trace_error, 1e-8);
      at_most("max_hermiticity_defect", herm, 1e-10);
      at_most("max_negative_eigenvalue", std::max(0.0, negative), 1e-8);
    }

    // excitation number without heating
    {
      const FockSpace space = space_for(2.3);
      std::vector<double> totals;
      const auto times = grid(tau_ex * 2.0, microseconds(10.0));
      evolve_sampled(DensityOperator::thermal(space, 0.35, 2.3), {w, detuning}, {}, times,
                     [&](Seconds, const DensityOperator& rho) {
                       totals.push_back(rho.mean_occupation(Mode::a) + rho.mean_occupation(Mode::b));
                     });
      double rate = 0.0;
      for (std::size_t i = 1; i < totals.size(); ++i) {
        const double dt_us = (times[i] - times[i - 1]).value() * 1e6;
        rate = std::max(rate, std::abs(totals[i] - totals[i - 1]) / dt_us);
      }
      at_most("max_excitation_drift_per_us", rate, 1e-8);
    }

    // heating only
    {
      const Seconds duration = microseconds(1000.0);
      const FockSpace space = space_for(2.3 + kMeasuredHeating * duration.value());
      double worst = 0.0;
      evolve_sampled(DensityOperator::thermal(space, 0.35, 2.3), {RadiansPerSecond(0.0), RadiansPerSecond(0.0)},
                     heating, grid(duration, microseconds(100.0)), [&](Seconds t, const DensityOperator& rho) {
                       const double grow = kMeasuredHeating * t.value();
                       worst = std::max(worst, std::abs(rho.mean_occupation(Mode::a) / (0.35 + grow) - 1.0));
                       worst = std::max(worst, std::abs(rho.mean_occupation(Mode::b) / (2.3 + grow) - 1.0));
                     });
      at_most("heating_only_max_relative_error", worst, 1e-4);
    }

    // single excitation against the Heisenberg mixing matrix
    {
      const FockSpace space(3, 3);
      double worst = 0.0;
      evolve_sampled(DensityOperator::fock(space, 1, 0), {w, RadiansPerSecond(0.0)}, {},
                     grid(tau_ex * 2.0, microseconds(10.0)), [&](Seconds t, const DensityOperator& rho) {
                       const double expected = std::norm(heisenberg_mode_swap(w, t)(0, 0));
                       worst = std::max(worst, std::abs(rho.mean_occupation(Mode::a) - expected));
                     });
      at_most("single_excitation_max_deviation", worst, 1e-6);
    }

    // step-size convergence
    {
      ExperimentPlan plan{trap, be_, be_, heating, 0.35, 2.3, {tau_ex * 2.0}};
      const double coarse = thermal_exchange_experiment(plan, w).values.back();
      plan.dt = default_time_step({w, RadiansPerSecond(0.0)}, heating) * 0.5;
      const double fine = thermal_exchange_experiment(plan, w).values.back();
      at_most("dt_halving_change", std::abs(fine - coarse), 1e-6);
    }
  }

  RegressionOptions options_;
  RegressionReport report_;
  int current_ = 0;
  double ideal_contrast_ = std::numeric_limits<double>::quiet_NaN();
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

const char* to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::within:
      return "within";
    case CheckKind::at_most:
      return "at_most";
    case CheckKind::less_than:
      return "less_than";
  }
  return "?";
}

bool RegressionReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

bool RegressionReport::criterion_passed(int criterion) const {
  return std::all_of(checks.begin(), checks.end(),
                     [criterion](const auto& c) { return c.criterion != criterion || c.passed; });
}

std::string RegressionReport::format() const {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-2s  %-40s  %-20s  %-20s  %-20s  %-9s  %s\n", "#", "check", "expected",
                "computed", "tolerance", "kind", "status");
  out += line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-2d  %-40s  %-20s  %-20s  %-20s  %-9s  %s\n", c.criterion, c.name.c_str(),
                  fmt(c.expected).c_str(), fmt(c.computed).c_str(), fmt(c.tolerance).c_str(), to_string(c.kind),
                  c.passed ? "PASS" : "FAIL");
    out += line;
  }
  return out;
}

RegressionReport run_regression(const RegressionOptions& options) {
  RegressionReport report = Suite(options).run();
  if (options.check_determinism) {
    RegressionOptions again = options;
    again.check_determinism = false;
    const RegressionReport second = Suite(again).run();
    const bool same = second.format() == report.format();
    report.checks.push_back({8, "repeat_run_table_differs", 0.0, same ? 0.0 : 1.0, 0.0, CheckKind::at_most, same});
  }
  return report;
}

}  // namespace cw
