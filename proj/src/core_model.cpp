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

#include "coupled_wells/core_model.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "coupled_wells/constants.hpp"
#include "coupled_wells/errors.hpp"

namespace cw {
namespace {

void require_positive(double v, const char* what) {
  // Also rejects NaN.
  if (!(v > 0.0)) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

IonSpecies::IonSpecies(Kilograms mass, Coulombs charge) : mass_(mass), charge_(charge) {
  require_positive(mass.value(), "ion mass");
  if (!(charge.value() != 0.0) || std::isnan(charge.value())) throw DomainError("ion charge must be non-zero");
}

IonSpecies IonSpecies::beryllium9() {
  using namespace constants;
  return IonSpecies(Kilograms(beryllium9_atomic_mass_u * atomic_mass_unit - electron_mass),
                    Coulombs(elementary_charge));
}

TrapConfig::TrapConfig(Meters separation, Meters height, Hertz freq_a, Hertz freq_b, bool shielding_enabled)
    : separation_(separation),
      height_(height),
      omega_a_(to_angular(freq_a)),
      omega_b_(to_angular(freq_b)),
      shielding_enabled_(shielding_enabled) {
  require_positive(separation.value(), "well separation s0");
  require_positive(height.value(), "trap height d0");
  require_positive(freq_a.value(), "freq_a");
  require_positive(freq_b.value(), "freq_b");
}

TrapConfig TrapConfig::with_freq_a(Hertz f) const {
  return TrapConfig(separation_, height_, f, freq_b(), shielding_enabled_);
}

TrapConfig TrapConfig::with_freq_b(Hertz f) const {
  return TrapConfig(separation_, height_, freq_a(), f, shielding_enabled_);
}

TrapConfig TrapConfig::with_shielding(bool enabled) const {
  TrapConfig copy = *this;
  copy.shielding_enabled_ = enabled;
  return copy;
}

TrapConfig TrapConfig::swapped() const {
  TrapConfig copy = *this;
  std::swap(copy.omega_a_, copy.omega_b_);
  return copy;
}

NewtonsPerMeter coulomb_coupling_constant(const IonSpecies& a, const IonSpecies& b, Meters separation) {
  require_positive(separation.value(), "well separation s0");
  const double s0 = separation.value();
  return NewtonsPerMeter(a.charge().value() * b.charge().value() /
                         (2.0 * std::numbers::pi * constants::vacuum_permittivity * s0 * s0 * s0));
}

double shielding_factor(Meters separation, Meters height) {
  require_positive(separation.value(), "well separation s0");
  require_positive(height.value(), "trap height d0");
  const double r = separation / height;
  const double u = 4.0 + r * r;
  return 1.0 - 0.5 * (3.0 * std::pow(r, 5) / std::pow(u, 2.5) - std::pow(r, 3) / std::pow(u, 1.5));
}

RadiansPerSecond exchange_rate(const TrapConfig& config, const IonSpecies& a, const IonSpecies& b) {
  // kappa / 2 = q_a q_b / (4 pi eps0 s0^3)
  const double half_kappa = 0.5 * coulomb_coupling_constant(a, b, config.separation()).value();
  const double reduced = std::sqrt(a.mass().value() * b.mass().value()) *
                         std::sqrt(config.omega_a().value() * config.omega_b().value());
  double rate = half_kappa / reduced;
  if (config.shielding_enabled()) rate *= shielding_factor(config.separation(), config.height());
  return RadiansPerSecond(rate);
}

Seconds exchange_time(RadiansPerSecond omega_ex) {
  require_positive(omega_ex.value(), "exchange rate");
  return Seconds(std::numbers::pi / (2.0 * omega_ex.value()));
}

CouplingParams coupling_params(const TrapConfig& config, const IonSpecies& a, const IonSpecies& b) {
  CouplingParams p;
  p.kappa = coulomb_coupling_constant(a, b, config.separation());
  p.beta = config.shielding_enabled() ? shielding_factor(config.separation(), config.height()) : 1.0;
  p.omega_ex = exchange_rate(config, a, b);
  p.tau_ex = exchange_time(p.omega_ex);
  return p;
}

StaticShift static_frequency_shift(const TrapConfig& config, const IonSpecies& a, const IonSpecies& b) {
  const double kappa = coulomb_coupling_constant(a, b, config.separation()).value();
  auto shift = [kappa](RadiansPerSecond w0, Kilograms m) {
    const double w = w0.value();
    const double curvature = w * w + kappa / m.value();
    if (!(curvature > 0.0)) throw InstabilityError("static Coulomb term removes the well curvature");
    // sqrt(w^2 + k/m) - w without the cancellation
    return to_cyclic(RadiansPerSecond((kappa / m.value()) / (std::sqrt(curvature) + w)));
  };
  return {shift(config.omega_a(), a.mass()), shift(config.omega_b(), b.mass())};
}

}  // namespace cw
