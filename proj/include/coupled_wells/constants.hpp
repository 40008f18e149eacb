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

// CODATA 2018 recommended values (SI).

namespace cw::constants {

inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double reduced_planck = 1.054571817e-34;        // J s
inline constexpr double elementary_charge = 1.602176634e-19;     // C (exact)
inline constexpr double atomic_mass_unit = 1.66053906660e-27;    // kg
inline constexpr double electron_mass = 9.1093837015e-31;        // kg

// Atomic mass of 9Be, in u.
inline constexpr double beryllium9_atomic_mass_u = 9.0121831;

}  // namespace cw::constants
