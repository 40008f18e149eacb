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
#include "coupled_wells/units.hpp"

namespace cw {

struct ModeSpectrum {
  Hertz f_minus;
  Hertz f_plus;
  Hertz splitting;  // f_plus - f_minus
};

/// Mode spectra across a sweep of detuning = freq_a - freq_b.
struct CrossingSweep {
  std::vector<Hertz> detunings;
  std::vector<ModeSpectrum> spectra;
};

/// Eigenfrequencies of the linearized coupled equations of motion
///   m_a x_a'' = -m_a w_a^2 x_a + kappa x_b
///   m_b x_b'' = -m_b w_b^2 x_b + kappa x_a
/// with kappa scaled by the shielding factor when enabled.
/// Throws InstabilityError when kappa^2 / (m_a m_b) >= w_a^2 w_b^2.
[[nodiscard]] ModeSpectrum normal_mode_frequencies(const TrapConfig& config, const IonSpecies& a, const IonSpecies& b);

/// Holds freq_b fixed and sweeps freq_a over freq_b + [-half_width, +half_width]
/// in `steps` evenly spaced points. A zero half-width yields a single point.
[[nodiscard]] CrossingSweep avoided_crossing_sweep(const TrapConfig& base, const IonSpecies& a, const IonSpecies& b,
                                                   Hertz half_width, int steps);

}  // namespace cw
