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

#include "coupled_wells/errors.hpp"
#include "coupled_wells/oscillation_fit.hpp"
#include "coupled_wells/protocol.hpp"
#include "doctest.h"

using namespace cw;

namespace {

ExperimentPlan plan_at(double mhz) {
  ExperimentPlan p{TrapConfig(micrometers(40), micrometers(40), megahertz(mhz), megahertz(mhz)),
                   IonSpecies::beryllium9(), IonSpecies::beryllium9()};
  return p;
}

std::vector<Seconds> grid_us(double stop, int n) {
  std::vector<Seconds> t;
  for (int i = 0; i < n; ++i) t.push_back(microseconds(stop * i / (n - 1)));
  return t;
}

}  // namespace

TEST_CASE("sideband ratio and its inverse") {
  CHECK(sideband_ratio(0.0) == 0.0);
  CHECK(sideband_ratio(2.3) == doctest::Approx(0.6969696969696969));
  for (double n : {0.01, 0.35, 2.3, 17.0}) CHECK(nbar_from_sideband_ratio(sideband_ratio(n)) == doctest::Approx(n));
  CHECK_THROWS_AS(sideband_ratio(-0.1), DomainError);
  CHECK_THROWS_AS(nbar_from_sideband_ratio(1.0), DomainError);
  CHECK_THROWS_AS(nbar_from_sideband_ratio(-0.2), DomainError);
}

TEST_CASE("blue sideband pulse") {
  const FockSpace space(20, 2, true);

  SUBCASE("thermal state transfer") {
    const auto rho = blue_sideband_pi_pulse(DensityOperator::thermal(space, 0.3, 0.0, Spin::down));
    CHECK(rho.spin_up_probability() == doctest::Approx(0.8890736833238188).epsilon(1e-9));
  }
  SUBCASE("ground state is a full pi pulse and back") {
    const auto once = blue_sideband_pi_pulse(DensityOperator::fock(space, 0, 0));
    CHECK(once.spin_up_probability() == doctest::Approx(1.0));
    CHECK(once.mean_occupation(Mode::a) == doctest::Approx(1.0));
    const auto twice = blue_sideband_pi_pulse(once);
    CHECK(twice.spin_up_probability() < 1e-15);
    CHECK(twice.mean_occupation(Mode::a) < 1e-15);
  }
  SUBCASE("one quantum rotates by sqrt(2) pi") {
    const auto once = blue_sideband_pi_pulse(DensityOperator::fock(space, 1, 0));
    CHECK(once.spin_up_probability() == doctest::Approx(0.6331276710207078).epsilon(1e-12));
    const auto twice = blue_sideband_pi_pulse(once);
    CHECK(twice.spin_up_probability() == doctest::Approx(0.9291080928344088).epsilon(1e-12));
  }
  SUBCASE("pulse error depolarizes the spin") {
    const auto rho = blue_sideband_pi_pulse(DensityOperator::fock(space, 0, 0), 0.1);
    CHECK(rho.spin_up_probability() == doctest::Approx(0.95));
    CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-14);
    CHECK_THROWS_AS((void)blue_sideband_pi_pulse(DensityOperator::fock(space, 0, 0), 1.0), DomainError);
  }
  SUBCASE("needs a spin and room above the population") {
    CHECK_THROWS_AS((void)blue_sideband_pi_pulse(DensityOperator::fock(FockSpace(3, 3), 0, 0)), DomainError);
    CHECK_THROWS_AS((void)blue_sideband_pi_pulse(DensityOperator::fock(space, 19, 0)), TruncationError);
  }
}

TEST_CASE("ideal single-quantum exchange is sin^2") {
  ExperimentPlan p = plan_at(5.56);
  p.taus = grid_us(900, 31);
  const RadiansPerSecond omega = exchange_rate(p.trap, p.species_a, p.species_b);
  const TimeSeries s = single_quantum_experiment(p);
  REQUIRE(s.size() == p.taus.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = std::sin(omega.value() * s.times[i].value());
    CHECK(s.values[i] == doctest::Approx(x * x).epsilon(1e-7));
  }
}

TEST_CASE("degraded single-quantum exchange loses contrast") {
  ExperimentPlan p = plan_at(5.56);
  p.taus = grid_us(900, 41);
  const double ideal = contrast(single_quantum_experiment(p));
  p.nbar_b = 0.6;
  p.heating = {QuantaPerSecond(500), QuantaPerSecond(500)};
  p.pulse_error = 0.05;
  const double degraded = contrast(single_quantum_experiment(p));
  MESSAGE("contrast ideal " << ideal << ", degraded " << degraded);
  CHECK(degraded < ideal - 0.1);
  CHECK(degraded > 0.3);
}

TEST_CASE("thermal exchange") {
  ExperimentPlan p = plan_at(4.04);
  p.nbar_a = 0.35;
  p.nbar_b = 2.3;

  SUBCASE("zero interaction time returns the prepared occupation") {
    p.taus = {Seconds(0.0)};
    const TimeSeries s = thermal_exchange_experiment(p);
    CHECK(s.values.at(0) == doctest::Approx(0.35).epsilon(1e-12));
  }
  SUBCASE("equal occupations without heating stay constant") {
    p.nbar_a = p.nbar_b = 1.1;
    p.taus = grid_us(300, 7);
    // the truncated thermal tail lowers the mean slightly; the value must not move
    const TimeSeries s = thermal_exchange_experiment(p);
    CHECK(s.values[0] == doctest::Approx(1.1).epsilon(1e-5));
    for (double v : s.values) CHECK(v == doctest::Approx(s.values[0]).epsilon(1e-9));
  }
  SUBCASE("resonant exchange with heating follows the closed form") {
    p.heating = {QuantaPerSecond(1885), QuantaPerSecond(1885)};
    p.taus = grid_us(400, 9);
    const RadiansPerSecond omega = exchange_rate(p.trap, p.species_a, p.species_b);
    const TimeSeries s = thermal_exchange_experiment(p);
    const TimeSeries ref = closed_form_exchange(0.35, 2.3, omega, QuantaPerSecond(1885), p.taus);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.values[i] == doctest::Approx(ref.values[i]).epsilon(1e-4));
  }
  SUBCASE("rate override scales the exchange") {
    p.taus = {microseconds(100)};
    const RadiansPerSecond omega = exchange_rate(p.trap, p.species_a, p.species_b) * 1.1;
    const double c = std::cos(omega.value() * 100e-6);
    CHECK(thermal_exchange_experiment(p, omega).values[0] ==
          doctest::Approx(0.35 * c * c + 2.3 * (1 - c * c)).epsilon(1e-4));
  }
  SUBCASE("plan validation") {
    p.taus = {microseconds(5)};
    p.ramp = RampModel::linear;
    CHECK_THROWS_AS((void)thermal_exchange_experiment(p), DomainError);
    p.ramp = RampModel::instantaneous;
    p.taus = {microseconds(5), microseconds(1)};
    CHECK_THROWS_AS((void)thermal_exchange_experiment(p), DomainError);
    p.taus = {microseconds(5)};
    p.nbar_b = -1.0;
    CHECK_THROWS_AS((void)thermal_exchange_experiment(p), DomainError);
  }
}

TEST_CASE("truncation grows with heating") {
  ExperimentPlan p = plan_at(4.04);
  p.nbar_a = 0.35;
  p.nbar_b = 2.3;
  p.taus = {microseconds(600)};
  const int cold = p.fock_dimension(false);
  p.heating = {QuantaPerSecond(1885), QuantaPerSecond(1885)};
  const int hot = p.fock_dimension(false);
  CHECK(hot > cold);
  CHECK(hot == FockSpace::required_dimension(2.3 + 1885 * 600e-6, 1e-6) + 3);
  CHECK(p.fock_dimension(true) >= hot);
}

TEST_CASE("linear ramp into resonance against a sudden switch") {
  // The 9 us chirp from 100 kHz is far from adiabatic (omega_ex^2 is three
  // orders below the sweep rate), so the modes already partly exchange
  // during the ramp. Report the size of that effect and check that it
  // vanishes for a short ramp.
  ExperimentPlan p = plan_at(4.04);
  p.nbar_a = 0.35;
  p.nbar_b = 2.3;
  p.taus = {microseconds(20), microseconds(80), microseconds(160), microseconds(240)};
  const TimeSeries sudden = thermal_exchange_experiment(p);

  auto worst_gap = [&](Seconds ramp_time) {
    ExperimentPlan q = p;
    q.ramp = RampModel::linear;
    q.ramp_time = ramp_time;
    const TimeSeries ramped = thermal_exchange_experiment(q);
    double worst = 0.0;
    for (std::size_t i = 0; i < ramped.size(); ++i) worst = std::max(worst, std::abs(ramped.values[i] - sudden.values[i]));
    return worst;
  };
  const double slow = worst_gap(microseconds(9));
  const double fast = worst_gap(microseconds(0.02));
  MESSAGE("max |<n_a>| gap, 9 us ramp: " << slow << ", 20 ns ramp: " << fast);
  CHECK(fast < 1e-3);
  CHECK(slow > fast);
  CHECK(slow < 0.1);
}
