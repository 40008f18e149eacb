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

#include "coupled_wells/units.hpp"

namespace cw {

/// Mass and charge of one trapped ion.
class IonSpecies {
 public:
  /// Throws DomainError unless mass > 0 and charge != 0.
  IonSpecies(Kilograms mass, Coulombs charge);

  /// Singly ionized 9Be (atomic mass minus one electron).
  static IonSpecies beryllium9();

  [[nodiscard]] Kilograms mass() const { return mass_; }
  [[nodiscard]] Coulombs charge() const { return charge_; }

  friend bool operator==(const IonSpecies&, const IonSpecies&) = default;

 private:
  Kilograms mass_;
  Coulombs charge_;
};

/// Two potential wells at height d0 above a grounded electrode plane,
/// separated by s0 along the trap axis. Well frequencies are stored as
/// angular frequencies; the Hz accessors exist for reporting.
class TrapConfig {
 public:
  /// Throws DomainError unless every length and frequency is positive.
  TrapConfig(Meters separation, Meters height, Hertz freq_a, Hertz freq_b, bool shielding_enabled = true);

  [[nodiscard]] Meters separation() const { return separation_; }
  [[nodiscard]] Meters height() const { return height_; }
  [[nodiscard]] RadiansPerSecond omega_a() const { return omega_a_; }
  [[nodiscard]] RadiansPerSecond omega_b() const { return omega_b_; }
  [[nodiscard]] Hertz freq_a() const { return to_cyclic(omega_a_); }
  [[nodiscard]] Hertz freq_b() const { return to_cyclic(omega_b_); }
  [[nodiscard]] bool shielding_enabled() const { return shielding_enabled_; }

  [[nodiscard]] TrapConfig with_freq_a(Hertz f) const;
  [[nodiscard]] TrapConfig with_freq_b(Hertz f) const;
  [[nodiscard]] TrapConfig with_shielding(bool enabled) const;
  [[nodiscard]] TrapConfig swapped() const;

 private:
  Meters separation_;
  Meters height_;
  RadiansPerSecond omega_a_;
  RadiansPerSecond omega_b_;
  bool shielding_enabled_;
};

/// Derived coupling quantities for one configured pair.
struct CouplingParams {
  NewtonsPerMeter kappa;  // bare, without shielding
  RadiansPerSecond omega_ex;
  double beta = 1.0;  // 1 when shielding is disabled
  Seconds tau_ex;
};

/// kappa = q_a q_b / (2 pi eps0 s0^3); the interaction energy is -kappa x_a x_b.
[[nodiscard]] NewtonsPerMeter coulomb_coupling_constant(const IonSpecies& a, const IonSpecies& b, Meters separation);

/// Ratio of the exchange rate with and without a grounded plane at height d0
/// (method of images). Peaks at 1.018 for s0 = d0.
[[nodiscard]] double shielding_factor(Meters separation, Meters height);

/// Exchange rate of the rotating-wave beam-splitter coupling, scaled by the
/// shielding factor when enabled. Uses sqrt(omega_a omega_b) even off
/// resonance.
[[nodiscard]] RadiansPerSecond exchange_rate(const TrapConfig& config, const IonSpecies& a, const IonSpecies& b);

/// Time for a complete energy swap, pi / (2 omega_ex).
[[nodiscard]] Seconds exchange_time(RadiansPerSecond omega_ex);

[[nodiscard]] CouplingParams coupling_params(const TrapConfig& config, const IonSpecies& a, const IonSpecies& b);

struct StaticShift {
  Hertz well_a;
  Hertz well_b;
};

/// Secular-frequency shift of each well from the x^2 terms of the Coulomb
/// expansion: sqrt(omega^2 + kappa/m) - omega. The bare kappa is used;
/// shielding applies only to the cross term.
[[nodiscard]] StaticShift static_frequency_shift(const TrapConfig& config, const IonSpecies& a, const IonSpecies& b);

}  // namespace cw
