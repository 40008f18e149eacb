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

#include <vector>

#include "coupled_wells/core_model.hpp"
#include "coupled_wells/density_operator.hpp"
#include "coupled_wells/dynamics.hpp"
#include "coupled_wells/time_series.hpp"
#include "coupled_wells/units.hpp"

namespace cw {

enum class RampModel { instantaneous, linear };

/// One experiment: trap and ions, heating, initial mean occupations and the
/// interaction times to sample. The interaction uses the exchange rate of
/// `trap` and its detuning freq_a - freq_b (zero on resonance).
struct ExperimentPlan {
  TrapConfig trap;
  IonSpecies species_a;
  IonSpecies species_b;
  HeatingModel heating;
  double nbar_a = 0.0;
  double nbar_b = 0.0;
  std::vector<Seconds> taus;

  // Thermal exchange only: the detuning is ramped linearly from
  // ramp_start_detuning to its final value in ramp_segments constant steps
  // before the interaction time starts.
  RampModel ramp = RampModel::instantaneous;
  Seconds ramp_time{9e-6};
  Hertz ramp_start_detuning{100e3};
  int ramp_segments = 90;

  // Depolarizing spin error applied after each sideband pulse.
  double pulse_error = 0.0;

  double tail_tol = 1e-6;
  Seconds dt{0.0};     // 0 selects the integrator default
  int headroom = 3;    // Fock levels added above the thermal requirement

  /// Throws DomainError on negative occupations or rates, unsorted or
  /// negative taus, a linear ramp not shorter than the first positive tau,
  /// or pulse_error outside [0, 1).
  void validate() const;

  /// Per-mode truncation that keeps the thermal tail below tail_tol for the
  /// largest occupation the plan can reach, plus headroom.
  [[nodiscard]] int fock_dimension(bool with_sideband_quantum) const;
};

/// <n_a>(tau) after thermal preparation, optional ramp into resonance and
/// interaction for tau with heating.
[[nodiscard]] TimeSeries thermal_exchange_experiment(const ExperimentPlan& plan);
[[nodiscard]] TimeSeries thermal_exchange_experiment(const ExperimentPlan& plan, RadiansPerSecond omega_ex);

/// Blue-sideband pi pulse on ion a, calibrated on n = 0: couples
/// |n, down> <-> |n+1, up> with rotation angle pi sqrt(n + 1), then applies
/// the depolarizing pulse error. Throws TruncationError when the top Fock
/// level of mode a holds more than tail_tol.
[[nodiscard]] DensityOperator blue_sideband_pi_pulse(const DensityOperator& state, double pulse_error = 0.0,
                                                     double tail_tol = 1e-6);

/// P(up_a)(tau) for: thermal (x) |down> -> pulse -> interaction for tau ->
/// pulse. The ions stay on resonance throughout, so the ramp is not used.
[[nodiscard]] TimeSeries single_quantum_experiment(const ExperimentPlan& plan);
[[nodiscard]] TimeSeries single_quantum_experiment(const ExperimentPlan& plan, RadiansPerSecond omega_ex);

/// Red/blue sideband strength ratio of a thermal state, nbar / (nbar + 1).
[[nodiscard]] double sideband_ratio(double nbar);
/// Inverse of sideband_ratio; throws DomainError unless 0 <= r < 1.
[[nodiscard]] double nbar_from_sideband_ratio(double r);

}  // namespace cw
