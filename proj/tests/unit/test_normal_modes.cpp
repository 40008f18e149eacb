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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "coupled_wells/errors.hpp"
#include "coupled_wells/normal_modes.hpp"
#include "doctest.h"

using namespace cw;

namespace {

const IonSpecies be = IonSpecies::beryllium9();

TrapConfig trap(double hz_a, double hz_b) {
  return TrapConfig(micrometers(40), micrometers(40), Hertz(hz_a), Hertz(hz_b));
}

// Generic symmetric eigen solve of the mass-weighted dynamical matrix.
ModeSpectrum reference(const TrapConfig& t, const IonSpecies& a, const IonSpecies& b) {
  const double k = coulomb_coupling_constant(a, b, t.separation()).value() *
                   (t.shielding_enabled() ? shielding_factor(t.separation(), t.height()) : 1.0);
  const double c = k / std::sqrt(a.mass().value() * b.mass().value());
  Eigen::Matrix2d m;
  m << std::pow(t.omega_a().value(), 2), -c, -c, std::pow(t.omega_b().value(), 2);
  const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(m).eigenvalues();
  const double lo = std::sqrt(ev(0)) / (2 * std::numbers::pi);
  const double hi = std::sqrt(ev(1)) / (2 * std::numbers::pi);
  return {Hertz(lo), Hertz(hi), Hertz(hi - lo)};
}

}  // namespace

TEST_CASE("resonant splitting") {
  const ModeSpectrum m = normal_mode_frequencies(trap(4.04e6, 4.04e6), be, be);
  CHECK(m.f_minus.value() == doctest::Approx(4038462.3009893824).epsilon(1e-13));
  CHECK(m.f_plus.value() == doctest::Approx(4041537.1139564635).epsilon(1e-13));
  CHECK(m.splitting.value() == doctest::Approx(3074.8129670810886).epsilon(1e-9));
  // splitting equals omega_ex / pi to well under a percent
  const double w = exchange_rate(trap(4.04e6, 4.04e6), be, be).value();
  CHECK(m.splitting.value() == doctest::Approx(w / std::numbers::pi).epsilon(0.005));
}

TEST_CASE("detuned splitting") {
  const ModeSpectrum m = normal_mode_frequencies(trap(4.05e6, 4.04e6), be, be);
  CHECK(m.splitting.value() == doctest::Approx(10460.933533562813).epsilon(1e-8));
}

TEST_CASE("closed form agrees with a generic eigen solve") {
  const IonSpecies heavy(Kilograms(3.0 * be.mass().value()), be.charge());
  for (double fa : {1.0e6, 4.0e6, 4.04e6, 5.56e6}) {
    for (double fb : {2.0e6, 4.04e6}) {
      for (const IonSpecies& other : {be, heavy}) {
        const TrapConfig t = trap(fa, fb);
        const ModeSpectrum got = normal_mode_frequencies(t, be, other);
        const ModeSpectrum ref = reference(t, be, other);
        CHECK(got.f_minus.value() == doctest::Approx(ref.f_minus.value()).epsilon(1e-12));
        CHECK(got.f_plus.value() == doctest::Approx(ref.f_plus.value()).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("over-strong coupling is unstable") {
  const TrapConfig soft(micrometers(1), micrometers(1), Hertz(1e3), Hertz(1e3));
  CHECK_THROWS_AS(normal_mode_frequencies(soft, be, be), InstabilityError);
}

TEST_CASE("crossing sweep") {
  const TrapConfig t = trap(4.04e6, 4.04e6);
  SUBCASE("zero width gives one point") {
    const CrossingSweep s = avoided_crossing_sweep(t, be, be, Hertz(0.0), 401);
    REQUIRE(s.spectra.size() == 1);
    CHECK(s.detunings[0].value() == 0.0);
    CHECK(s.spectra[0].splitting.value() == doctest::Approx(3074.8129670810886).epsilon(1e-9));
  }
  SUBCASE("minimum sits at zero detuning and branches are monotonic") {
    const CrossingSweep s = avoided_crossing_sweep(t, be, be, kilohertz(20), 401);
    REQUIRE(s.spectra.size() == 401);
    CHECK(s.detunings.front().value() == -20e3);
    CHECK(s.detunings.back().value() == 20e3);
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.spectra.size(); ++i) {
      if (s.spectra[i].splitting < s.spectra[best].splitting) best = i;
      CHECK(s.spectra[i].f_minus > s.spectra[i - 1].f_minus);
      CHECK(s.spectra[i].f_plus > s.spectra[i - 1].f_plus);
    }
    CHECK(best == 200);
    CHECK(s.detunings[best].value() == 0.0);
    CHECK(s.spectra[best].splitting.value() * 1e-3 == doctest::Approx(3.1).epsilon(0.02));
  }
  SUBCASE("invalid arguments") {
    CHECK_THROWS_AS(avoided_crossing_sweep(t, be, be, kilohertz(20), 1), DomainError);
    CHECK_THROWS_AS(avoided_crossing_sweep(t, be, be, Hertz(-1.0), 11), DomainError);
    CHECK_THROWS_AS(avoided_crossing_sweep(t, be, be, megahertz(5), 11), DomainError);
  }
}
