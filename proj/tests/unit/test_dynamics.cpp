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

#include "coupled_wells/core_model.hpp"
#include "coupled_wells/dynamics.hpp"
#include "coupled_wells/errors.hpp"
#include "doctest.h"

using namespace cw;

namespace {

const RadiansPerSecond kOmega(9659.809129100173);  // 4.04 MHz, 40 um
const RadiansPerSecond kDetuning(2.0 * std::numbers::pi * 3e3);
const HeatingModel kHeating{QuantaPerSecond(1885.0), QuantaPerSecond(1885.0)};

EvolveOptions loose_tail() {
  EvolveOptions o;
  o.tail_tol = 1e-2;
  return o;
}

}  // namespace

TEST_CASE("step size defaults and bounds") {
  const ExchangeHamiltonian h{kOmega, RadiansPerSecond(0.0)};
  CHECK(generator_rate_scale(h, {}) == kOmega.value());
  const RadiansPerSecond wide(2.0 * std::numbers::pi * 10e3);
  CHECK(generator_rate_scale({kOmega, wide}, {}) == doctest::Approx(wide.value() / 2));
  CHECK(generator_rate_scale({kOmega, kDetuning}, {}) == kOmega.value());
  CHECK(generator_rate_scale({RadiansPerSecond(1.0), RadiansPerSecond(0.0)}, kHeating) == 1885.0);
  CHECK(default_time_step(h, {}).value() == doctest::Approx(1.0 / (200 * kOmega.value())));
  CHECK(max_time_step(h, {}).value() == doctest::Approx(0.01 / kOmega.value()));

  const FockSpace space(3, 3);
  EvolveOptions coarse;
  coarse.dt = max_time_step(h, {}) * 1.5;
  CHECK_THROWS_AS(evolve(DensityOperator::fock(space, 1, 0), h, {}, microseconds(10), coarse), StepSizeError);
  EvolveOptions negative;
  negative.dt = Seconds(-1.0);
  CHECK_THROWS_AS(evolve(DensityOperator::fock(space, 1, 0), h, {}, microseconds(10), negative), DomainError);
  CHECK_THROWS_AS(evolve(DensityOperator::fock(space, 1, 0), h, {}, Seconds(-1e-6)), DomainError);
}

TEST_CASE("matches a dense master-equation reference") {
  // frozen from tests/oracle/derive_values.py (expm of the 1296 x 1296 generator)
  const FockSpace space(6, 6);
  const ExchangeHamiltonian h{kOmega, kDetuning};

  SUBCASE("symmetric single excitation") {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space.dimension());
    psi(space.index(1, 0)) = psi(space.index(0, 1)) = std::sqrt(0.5);
    const DensityOperator rho = evolve(DensityOperator::pure(space, psi), h, kHeating, microseconds(100), loose_tail());
    CHECK(rho.mean_occupation(Mode::a) == doctest::Approx(1.1636056053796244).epsilon(1e-8));
    CHECK(rho.mean_occupation(Mode::b) == doctest::Approx(0.21277337727517392).epsilon(1e-8));
    const Complex c = rho(space.index(1, 0), space.index(0, 1));
    CHECK(c.real() == doctest::Approx(0.017938132694153036).epsilon(1e-7));
    CHECK(c.imag() == doctest::Approx(-0.07492329007931489).epsilon(1e-8));
  }
  SUBCASE("coherence between neighbouring excitation numbers") {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space.dimension());
    psi(space.index(0, 0)) = psi(space.index(1, 0)) = std::sqrt(0.5);
    const DensityOperator rho = evolve(DensityOperator::pure(space, psi), h, kHeating, microseconds(100), loose_tail());
    CHECK(rho.mean_occupation(Mode::a) == doctest::Approx(0.44450620521651507).epsilon(1e-8));
    const Complex c10 = rho(space.index(0, 0), space.index(1, 0));
    CHECK(c10.real() == doctest::Approx(0.0653475433986936).epsilon(1e-8));
    CHECK(c10.imag() == doctest::Approx(0.20292204059604552).epsilon(1e-8));
    const Complex c01 = rho(space.index(0, 0), space.index(0, 1));
    CHECK(std::abs(c01.real()) < 1e-9);
    CHECK(c01.imag() == doctest::Approx(0.20798242549873952).epsilon(1e-8));
  }
}

TEST_CASE("single excitation follows the Heisenberg mixing matrix") {
  const FockSpace space(3, 3);
  const Seconds tau_ex = exchange_time(kOmega);
  for (double frac : {0.1, 0.5, 1.0, 1.37, 2.0}) {
    const Seconds t = tau_ex * frac;
    const DensityOperator rho = evolve(DensityOperator::fock(space, 1, 0), {kOmega, RadiansPerSecond(0.0)}, {}, t);
    const Eigen::Matrix2cd u = heisenberg_mode_swap(kOmega, t);
    CHECK(rho.mean_occupation(Mode::a) == doctest::Approx(std::norm(u(0, 0))).epsilon(1e-9));
    CHECK(rho.mean_occupation(Mode::b) == doctest::Approx(std::norm(u(1, 0))).epsilon(1e-9));
    // amplitude phase: <0,1|rho|1,0> = u10 conj(u00)
    const Complex coh = rho(space.index(0, 1), space.index(1, 0));
    const Complex expected = u(1, 0) * std::conj(u(0, 0));
    CHECK(std::abs(coh - expected) < 1e-9);
  }
  const Eigen::Matrix2cd full = heisenberg_mode_swap(kOmega, tau_ex);
  CHECK(std::abs(full(0, 0)) < 1e-15);
  CHECK(full(1, 0).imag() == doctest::Approx(-1.0));
}

TEST_CASE("detuned exchange probability") {
  const RadiansPerSecond delta(2.0 * std::numbers::pi * 100e3);
  const double eff = std::sqrt(kOmega.value() * kOmega.value() + delta.value() * delta.value() / 4);
  const Seconds peak(std::numbers::pi / (2 * eff));
  CHECK(detuned_exchange_probability(kOmega, delta, peak) == doctest::Approx(0.0009445543149718516).epsilon(1e-10));
  CHECK(detuned_exchange_probability(kOmega, RadiansPerSecond(0.0), exchange_time(kOmega)) ==
        doctest::Approx(1.0));
  CHECK(detuned_exchange_probability(RadiansPerSecond(0.0), RadiansPerSecond(0.0), Seconds(1.0)) == 0.0);

  // the master equation agrees off resonance too
  const FockSpace space(3, 3);
  const DensityOperator rho = evolve(DensityOperator::fock(space, 1, 0), {kOmega, delta}, {}, peak);
  CHECK(rho.mean_occupation(Mode::b) == doctest::Approx(0.0009445543149718516).epsilon(1e-7));
}

TEST_CASE("closed-form exchange with heating") {
  const Seconds tau_ex = exchange_time(kOmega);
  const Seconds times[] = {Seconds(0.0), tau_ex, microseconds(155)};
  const TimeSeries s = closed_form_exchange(0.35, 2.3, kOmega, QuantaPerSecond(1885), times);
  CHECK(s.values[0] == 0.35);
  CHECK(s.values[1] == doctest::Approx(2.3 + 1885 * tau_ex.value()));
  const double c = std::cos(kOmega.value() * 155e-6);
  CHECK(s.values[2] == doctest::Approx(0.35 * c * c + 2.3 * (1 - c * c) + 1885 * 155e-6));
  CHECK_THROWS_AS(closed_form_exchange(-1.0, 0.0, kOmega, QuantaPerSecond(0), times), DomainError);
}

TEST_CASE("thermal exchange with heating matches the closed form") {
  const int dim = FockSpace::required_dimension(2.3 + 1885 * 200e-6, 1e-6) + 3;
  const FockSpace space(dim, dim);
  std::vector<Seconds> times;
  for (int i = 0; i <= 20; ++i) times.push_back(microseconds(10.0 * i));
  const TimeSeries oracle = closed_form_exchange(0.35, 2.3, kOmega, QuantaPerSecond(1885), times);
  double worst = 0.0;
  std::size_t k = 0;
  evolve_sampled(DensityOperator::thermal(space, 0.35, 2.3), {kOmega, RadiansPerSecond(0.0)}, kHeating, times,
                 [&](Seconds, const DensityOperator& rho) {
                   worst = std::max(worst, std::abs(rho.mean_occupation(Mode::a) - oracle.values[k++]));
                 });
  CHECK(k == times.size());
  CHECK(worst < 1e-4);
}

TEST_CASE("physicality along a detuned heated trajectory") {
  const FockSpace space(22, 22);
  EvolveStats stats;
  EvolveOptions options;
  options.stats = &stats;
  std::vector<Seconds> times;
  for (int i = 0; i <= 10; ++i) times.push_back(microseconds(20.0 * i));
  double total0 = -1.0;
  evolve_sampled(DensityOperator::thermal(space, 0.35, 0.6), {kOmega, kDetuning}, kHeating, times,
                 [&](Seconds t, const DensityOperator& rho) {
                   CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);
                   CHECK(rho.hermiticity_defect() < 1e-12);
                   CHECK(rho.min_eigenvalue() > -1e-10);
                   const double total = rho.mean_occupation(Mode::a) + rho.mean_occupation(Mode::b);
                   if (total0 < 0) total0 = total;
                   CHECK(total == doctest::Approx(total0 + 2 * 1885 * t.value()).epsilon(1e-6));
                 },
                 options);
  CHECK(stats.steps > 0);
  CHECK(stats.max_trace_drift < 1e-8);
}

TEST_CASE("tail check rejects a truncation that heating outgrows") {
  const FockSpace space(4, 4);
  CHECK_THROWS_AS(evolve(DensityOperator::fock(space, 1, 0), {kOmega, RadiansPerSecond(0.0)}, kHeating,
                         microseconds(500)),
                  TruncationError);
}

TEST_CASE("sample times are validated") {
  const FockSpace space(3, 3);
  const Seconds unsorted[] = {microseconds(2), microseconds(1)};
  CHECK_THROWS_AS(evolve_sampled(DensityOperator::fock(space, 1, 0), {kOmega, RadiansPerSecond(0.0)}, {}, unsorted, {}),
                  DomainError);
  CHECK_THROWS_AS(evolve(DensityOperator::fock(space, 1, 0), {kOmega, RadiansPerSecond(0.0)},
                         {QuantaPerSecond(-1.0), QuantaPerSecond(0.0)}, microseconds(1)),
                  DomainError);
}
