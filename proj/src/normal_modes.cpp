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

#include "coupled_wells/normal_modes.hpp"

#include <cmath>

#include "coupled_wells/errors.hpp"

namespace cw {

ModeSpectrum normal_mode_frequencies(const TrapConfig& config, const IonSpecies& a, const IonSpecies& b) {
  double kappa = coulomb_coupling_constant(a, b, config.separation()).value();
  if (config.shielding_enabled()) kappa *= shielding_factor(config.separation(), config.height());

  const double wa2 = config.omega_a().value() * config.omega_a().value();
  const double wb2 = config.omega_b().value() * config.omega_b().value();
  const double coupling2 = kappa * kappa / (a.mass().value() * b.mass().value());
  if (coupling2 >= wa2 * wb2) {
    throw InstabilityError("Coulomb coupling exceeds the well confinement; no stable normal modes");
  }

  const double mean = 0.5 * (wa2 + wb2);
  const double half_diff = 0.5 * (wa2 - wb2);
  const double root = std::sqrt(half_diff * half_diff + coupling2);
  // mean - root loses precision when the coupling is tiny next to w^2; the
  // product of the roots is exact.
  const double w_plus2 = mean + root;
  const double w_minus2 = (wa2 * wb2 - coupling2) / w_plus2;

  ModeSpectrum s;
  s.f_plus = to_cyclic(RadiansPerSecond(std::sqrt(w_plus2)));
  s.f_minus = to_cyclic(RadiansPerSecond(std::sqrt(w_minus2)));
  s.splitting = s.f_plus - s.f_minus;
  return s;
}

CrossingSweep avoided_crossing_sweep(const TrapConfig& base, const IonSpecies& a, const IonSpecies& b,
                                     Hertz half_width, int steps) {
  if (half_width.value() < 0.0) throw DomainError("sweep half-width must be non-negative");
  if (steps < 2) throw DomainError("sweep needs at least two steps");

  CrossingSweep sweep;
  if (half_width.value() == 0.0) {
    sweep.detunings.push_back(Hertz(0.0));
    sweep.spectra.push_back(normal_mode_frequencies(base.with_freq_a(base.freq_b()), a, b));
    return sweep;
  }

  sweep.detunings.reserve(steps);
  sweep.spectra.reserve(steps);
  const Hertz fb = base.freq_b();
  for (int i = 0; i < steps; ++i) {
    // Endpoints are hit exactly and the grid is symmetric about zero.
    const double x = -1.0 + 2.0 * static_cast<double>(i) / (steps - 1);
    const Hertz detuning = half_width * x;
    sweep.detunings.push_back(detuning);
    sweep.spectra.push_back(normal_mode_frequencies(base.with_freq_a(fb + detuning), a, b));
  }
  return sweep;
}

}  // namespace cw
