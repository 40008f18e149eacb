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

#include <array>
#include <complex>
#include <functional>
#include <span>

#include <Eigen/Dense>

#include "coupled_wells/density_operator.hpp"
#include "coupled_wells/time_series.hpp"
#include "coupled_wells/units.hpp"

namespace cw {

/// Rotating-frame exchange Hamiltonian
///   H / hbar = (delta / 2)(a^dag a - b^dag b) + omega_ex (a b^dag + a^dag b)
/// with delta = omega_a - omega_b. The counter-rotating terms are dropped.
struct ExchangeHamiltonian {
  RadiansPerSecond omega_ex;
  RadiansPerSecond detuning;

  /// Dense H / hbar on `space` (identity on the spin factor).
  [[nodiscard]] Eigen::MatrixXcd matrix(const FockSpace& space) const;
};

/// Symmetric heating: jump operators sqrt(ndot) a and sqrt(ndot) a^dag per
/// mode, which grows <n> at exactly ndot regardless of the state.
struct HeatingModel {
  QuantaPerSecond ndot_a{0.0};
  QuantaPerSecond ndot_b{0.0};

  [[nodiscard]] QuantaPerSecond mean() const { return (ndot_a + ndot_b) * 0.5; }
  [[nodiscard]] bool enabled() const { return ndot_a.value() > 0.0 || ndot_b.value() > 0.0; }
};

struct EvolveStats {
  long steps = 0;
  double max_trace_drift = 0.0;  // largest per-step |Tr change| before renormalization
};

struct EvolveOptions {
  Seconds dt{0.0};  // 0 selects default_time_step()
  double tail_tol = 1e-6;
  double trace_drift_budget = 1e-8;  // per step, before renormalization
  EvolveStats* stats = nullptr;      // accumulated when set
};

/// Largest rate among |delta|/2, omega_ex and the heating rates, in 1/s.
[[nodiscard]] double generator_rate_scale(const ExchangeHamiltonian& h, const HeatingModel& heating);
/// 1 / (200 * rate scale).
[[nodiscard]] Seconds default_time_step(const ExchangeHamiltonian& h, const HeatingModel& heating);
/// 0.01 / rate scale; evolve() rejects anything coarser.
[[nodiscard]] Seconds max_time_step(const ExchangeHamiltonian& h, const HeatingModel& heating);

using SampleObserver = std::function<void(Seconds, const DensityOperator&)>;

/// Integrates the master equation with fixed-step RK4 and calls `observer`
/// at each of the sorted, non-negative sample times. Returns the state at
/// the last sample. Throws TruncationError when the top Fock level of either
/// mode exceeds tail_tol at a sample, StepSizeError for a too-coarse dt or a
/// trace drift over budget.
DensityOperator evolve_sampled(const DensityOperator& rho0, const ExchangeHamiltonian& h, const HeatingModel& heating,
                               std::span<const Seconds> sample_times, const SampleObserver& observer,
                               const EvolveOptions& options = {});

DensityOperator evolve(const DensityOperator& rho0, const ExchangeHamiltonian& h, const HeatingModel& heating,
                       Seconds duration, const EvolveOptions& options = {});

/// Resonant Langevin solution with heating:
///   <n_a>(t) = n_a0 cos^2(omega t) + n_b0 sin^2(omega t) + ndot t
[[nodiscard]] TimeSeries closed_form_exchange(double nbar_a0, double nbar_b0, RadiansPerSecond omega_ex,
                                              QuantaPerSecond ndot, std::span<const Seconds> times);

/// Mode-operator mixing matrix of the resonant Heisenberg solution with the
/// common exp(i omega0 t) dropped: [[cos, -i sin], [-i sin, cos]].
[[nodiscard]] Eigen::Matrix2cd heisenberg_mode_swap(RadiansPerSecond omega_ex, Seconds t);

/// Single-excitation transfer probability |1,0> -> |0,1> with detuning:
///   (omega_ex / omega_eff)^2 sin^2(omega_eff t),  omega_eff^2 = omega_ex^2 + delta^2 / 4
[[nodiscard]] double detuned_exchange_probability(RadiansPerSecond omega_ex, RadiansPerSecond delta, Seconds t);

}  // namespace cw
