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

#include "coupled_wells/constants.hpp"
#include "coupled_wells/core_model.hpp"
#include "coupled_wells/errors.hpp"
#include "doctest.h"

using namespace cw;

namespace {

const IonSpecies be = IonSpecies::beryllium9();

TrapConfig trap(double mhz_a, double mhz_b, bool shielding = true) {
  return TrapConfig(micrometers(40), micrometers(40), megahertz(mhz_a), megahertz(mhz_b), shielding);
}

}  // namespace

TEST_CASE("units convert between cyclic and angular frequency") {
  CHECK(to_angular(Hertz(1.0)).value() == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(to_cyclic(to_angular(megahertz(4.04))).value() == doctest::Approx(4.04e6).epsilon(1e-15));
  CHECK(micrometers(40).value() == doctest::Approx(40e-6));
  CHECK(microseconds(162).value() == doctest::Approx(162e-6));
  CHECK((Seconds(3.0) / Seconds(1.5)) == 2.0);
  CHECK(Meters(1.0) < Meters(2.0));
}

TEST_CASE("beryllium ion mass is the atomic mass less one electron") {
  const double expected = 9.0121831 * constants::atomic_mass_unit - constants::electron_mass;
  CHECK(be.mass().value() == doctest::Approx(expected).epsilon(1e-15));
  CHECK(be.charge().value() == constants::elementary_charge);
}

TEST_CASE("species and trap validation") {
  CHECK_THROWS_AS(IonSpecies(Kilograms(0.0), Coulombs(1e-19)), DomainError);
  CHECK_THROWS_AS(IonSpecies(Kilograms(1e-26), Coulombs(0.0)), DomainError);
  CHECK_THROWS_AS(TrapConfig(Meters(0.0), micrometers(40), megahertz(4), megahertz(4)), DomainError);
  CHECK_THROWS_AS(TrapConfig(micrometers(40), Meters(-1e-6), megahertz(4), megahertz(4)), DomainError);
  CHECK_THROWS_AS(TrapConfig(micrometers(40), micrometers(40), Hertz(0.0), megahertz(4)), DomainError);
  CHECK_THROWS_AS(TrapConfig(micrometers(40), micrometers(40), megahertz(4), Hertz(-1.0)), DomainError);
  CHECK_THROWS_AS(shielding_factor(Meters(0.0), micrometers(40)), DomainError);
}

TEST_CASE("coupling constant for two beryllium ions 40 um apart") {
  // frozen from tests/oracle/derive_values.py
  CHECK(coulomb_coupling_constant(be, be, micrometers(40)).value() ==
        doctest::Approx(7.209617351067923e-15).epsilon(1e-12));
}

TEST_CASE("shielding factor") {
  CHECK(shielding_factor(micrometers(40), micrometers(40)) == doctest::Approx(1.0178885438199983).epsilon(1e-14));
  // no correction for a far-away plane, strong screening for a close one
  CHECK(shielding_factor(micrometers(40), micrometers(40000)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(shielding_factor(micrometers(40), micrometers(0.4)) < 2e-3);
  // depends only on the ratio
  CHECK(shielding_factor(micrometers(80), micrometers(40)) ==
        doctest::Approx(shielding_factor(micrometers(20), micrometers(10))).epsilon(1e-14));
}

TEST_CASE("exchange rate and exchange time at 4.04 MHz") {
  const RadiansPerSecond w = exchange_rate(trap(4.04, 4.04), be, be);
  CHECK(w.value() == doctest::Approx(9659.809129100173).epsilon(1e-12));
  CHECK(exchange_time(w).value() * 1e6 == doctest::Approx(162.61152842687883).epsilon(1e-12));
  CHECK(exchange_time(w).value() * 1e6 == doctest::Approx(162.0).epsilon(0.01));
  CHECK(exchange_rate(trap(4.04, 4.04, false), be, be).value() == doctest::Approx(9490.046024929423).epsilon(1e-12));
}

TEST_CASE("exchange time at 5.56 MHz") {
  const RadiansPerSecond w = exchange_rate(trap(5.56, 5.56), be, be);
  CHECK(w.value() == doctest::Approx(7018.998000281421).epsilon(1e-12));
  CHECK(2.0 * exchange_time(w).value() * 1e6 == doctest::Approx(447.58420695715165).epsilon(1e-12));
}

TEST_CASE("exchange rate properties") {
  const IonSpecies heavy(Kilograms(2.0 * be.mass().value()), be.charge());
  for (double fa : {3.0, 4.04, 5.56}) {
    for (double fb : {3.5, 4.04}) {
      const TrapConfig t = trap(fa, fb);
      const double shielded = exchange_rate(t, be, heavy).value();
      const double bare = exchange_rate(t.with_shielding(false), be, heavy).value();
      CHECK(shielded == doctest::Approx(shielding_factor(t.separation(), t.height()) * bare).epsilon(1e-14));
      CHECK(exchange_rate(t, heavy, be).value() == doctest::Approx(shielded).epsilon(1e-14));
      CHECK(exchange_rate(t.swapped(), be, heavy).value() == doctest::Approx(shielded).epsilon(1e-14));
      CHECK(exchange_time(RadiansPerSecond(shielded)).value() * shielded ==
            doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    }
  }
  CHECK_THROWS_AS(exchange_time(RadiansPerSecond(0.0)), DomainError);
}

TEST_CASE("coupling params bundle") {
  const CouplingParams p = coupling_params(trap(4.04, 4.04), be, be);
  CHECK(p.beta == doctest::Approx(1.0178885438199983));
  CHECK(p.kappa.value() == doctest::Approx(7.209617351067923e-15));
  CHECK(p.tau_ex.value() * p.omega_ex.value() == doctest::Approx(std::numbers::pi / 2));
  CHECK(coupling_params(trap(4.04, 4.04, false), be, be).beta == 1.0);
}

TEST_CASE("static frequency shift") {
  const StaticShift s = static_frequency_shift(trap(4.04, 4.04), be, be);
  CHECK(s.well_a.value() == doctest::Approx(1510.1055050080588).epsilon(1e-9));
  CHECK(s.well_b.value() == doctest::Approx(s.well_a.value()));
  // weaker confinement shifts more
  const StaticShift d = static_frequency_shift(trap(3.0, 5.0), be, be);
  CHECK(d.well_a.value() > d.well_b.value());
}
