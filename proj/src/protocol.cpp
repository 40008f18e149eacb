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

#include "coupled_wells/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "coupled_wells/errors.hpp"

namespace cw {
namespace {

ExchangeHamiltonian interaction(const ExperimentPlan& plan, RadiansPerSecond omega_ex) {
  return {omega_ex, plan.trap.omega_a() - plan.trap.omega_b()};
}

EvolveOptions evolve_options(const ExperimentPlan& plan) {
  EvolveOptions options;
  options.dt = plan.dt;
  options.tail_tol = plan.tail_tol;
  return options;
}

std::vector<SparseComplexMatrix> blue_sideband_unitary(const FockSpace& space) {
  std::vector<SparseComplexMatrix> unitary(space.max_charge() + 1);
  for (int q = 0; q <= space.max_charge(); ++q) {
    const auto members = space.sector(q);
    const int n = static_cast<int>(members.size());
    std::vector<Eigen::Triplet<Complex>> triplets;
    std::vector<bool> paired(n, false);
    for (int i = 0; i < n; ++i) {
      const auto s = space.state(members[i]);
      if (s.spin != Spin::down || s.n_a + 1 >= space.dim_a()) continue;
      const int j = space.local_index(space.index(Spin::up, s.n_a + 1, s.n_b));
      const double half_angle = 0.5 * std::numbers::pi * std::sqrt(static_cast<double>(s.n_a + 1));
      const Complex c(std::cos(half_angle), 0.0);
      const Complex is(0.0, -std::sin(half_angle));
      triplets.emplace_back(i, i, c);
      triplets.emplace_back(j, j, c);
      triplets.emplace_back(i, j, is);
      triplets.emplace_back(j, i, is);
      paired[i] = paired[j] = true;
    }
    for (int i = 0; i < n; ++i) {
      if (!paired[i]) triplets.emplace_back(i, i, Complex(1.0, 0.0));
    }
    unitary[q].resize(n, n);
    unitary[q].setFromTriplets(triplets.begin(), triplets.end());
  }
  return unitary;
}

}  // namespace

void ExperimentPlan::validate() const {
  if (!(nbar_a >= 0.0) || !(nbar_b >= 0.0)) throw DomainError("initial mean occupations must be >= 0");
  if (heating.ndot_a.value() < 0.0 || heating.ndot_b.value() < 0.0) throw DomainError("heating rates must be >= 0");
  if (!std::is_sorted(taus.begin(), taus.end())) throw DomainError("interaction times must be sorted");
  if (!taus.empty() && taus.front().value() < 0.0) throw DomainError("interaction times must be >= 0");
  if (!(pulse_error >= 0.0 && pulse_error < 1.0)) throw DomainError("pulse_error must lie in [0, 1)");
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw DomainError("tail_tol must lie in (0, 1)");
  if (headroom < 0) throw DomainError("headroom must be >= 0");
  if (ramp == RampModel::linear) {
    if (!(ramp_time.value() > 0.0)) throw DomainError("linear ramp needs a positive ramp_time");
    if (ramp_segments < 1) throw DomainError("linear ramp needs at least one segment");
    const auto first_positive = std::find_if(taus.begin(), taus.end(), [](Seconds t) { return t.value() > 0.0; });
    if (first_positive != taus.end() && !(ramp_time < *first_positive)) {
      throw DomainError("ramp_time must be shorter than the first positive interaction time");
    }
  }
}

int ExperimentPlan::fock_dimension(bool with_sideband_quantum) const {
  const double longest = (taus.empty() ? 0.0 : taus.back().value()) +
                         (ramp == RampModel::linear ? ramp_time.value() : 0.0);
  const double rate = std::max(heating.ndot_a.value(), heating.ndot_b.value());
  const double peak = std::max(nbar_a, nbar_b) + rate * longest + (with_sideband_quantum ? 1.0 : 0.0);
  return FockSpace::required_dimension(peak, tail_tol) + headroom;
}

TimeSeries thermal_exchange_experiment(const ExperimentPlan& plan) {
  return thermal_exchange_experiment(plan, exchange_rate(plan.trap, plan.species_a, plan.species_b));
}

TimeSeries thermal_exchange_experiment(const ExperimentPlan& plan, RadiansPerSecond omega_ex) {
  plan.validate();
  const int dim = plan.fock_dimension(false);
  const FockSpace space(dim, dim);
  const EvolveOptions options = evolve_options(plan);

  DensityOperator rho = DensityOperator::thermal(space, plan.nbar_a, plan.nbar_b, std::nullopt, plan.tail_tol);

  const ExchangeHamiltonian on_resonance = interaction(plan, omega_ex);
  if (plan.ramp == RampModel::linear) {
    const RadiansPerSecond start = to_angular(plan.ramp_start_detuning);
    const RadiansPerSecond end = on_resonance.detuning;
    const Seconds segment = plan.ramp_time / static_cast<double>(plan.ramp_segments);
    for (int k = 0; k < plan.ramp_segments; ++k) {
      const double midpoint = (k + 0.5) / plan.ramp_segments;
      const ExchangeHamiltonian h{omega_ex, start + (end - start) * midpoint};
      EvolveOptions segment_options = options;
      if (segment_options.dt.value() > 0.0) {
        segment_options.dt = std::min(segment_options.dt, default_time_step(h, plan.heating));
      }
      rho = evolve(rho, h, plan.heating, segment, segment_options);
    }
  }

  TimeSeries series{"n_a_mean", {}, {}, std::nullopt};
  series.times.reserve(plan.taus.size());
  series.values.reserve(plan.taus.size());
  evolve_sampled(
      rho, on_resonance, plan.heating, plan.taus,
      [&series](Seconds t, const DensityOperator& state) {
        series.times.push_back(t);
        series.values.push_back(state.mean_occupation(Mode::a));
      },
      options);
  return series;
}

DensityOperator blue_sideband_pi_pulse(const DensityOperator& state, double pulse_error, double tail_tol) {
  const FockSpace& space = state.space();
  if (!space.has_spin()) throw DomainError("sideband pulse needs a spin factor on ion a");
  if (!(pulse_error >= 0.0 && pulse_error < 1.0)) throw DomainError("pulse_error must lie in [0, 1)");
  const double top = state.top_level_population(Mode::a);
  if (top > tail_tol) {
    throw TruncationError("top Fock level of mode a holds " + std::to_string(top) +
                              " before the sideband pulse; raise the truncation",
                          space.dim_a() + 1);
  }
  const auto unitary = blue_sideband_unitary(space);
  DensityOperator out = state.conjugated(unitary);
  if (pulse_error > 0.0) out = out.depolarize_spin(pulse_error);
  return out;
}

TimeSeries single_quantum_experiment(const ExperimentPlan& plan) {
  return single_quantum_experiment(plan, exchange_rate(plan.trap, plan.species_a, plan.species_b));
}

TimeSeries single_quantum_experiment(const ExperimentPlan& plan, RadiansPerSecond omega_ex) {
  plan.validate();
  const int dim = plan.fock_dimension(true);
  const FockSpace space(dim, dim, true);

  DensityOperator rho = DensityOperator::thermal(space, plan.nbar_a, plan.nbar_b, Spin::down, plan.tail_tol);
  rho = blue_sideband_pi_pulse(rho, plan.pulse_error, plan.tail_tol);

  TimeSeries series{"p_up_a", {}, {}, std::nullopt};
  series.times.reserve(plan.taus.size());
  series.values.reserve(plan.taus.size());
  evolve_sampled(
      rho, interaction(plan, omega_ex), plan.heating, plan.taus,
      [&](Seconds t, const DensityOperator& state) {
        series.times.push_back(t);
        series.values.push_back(blue_sideband_pi_pulse(state, plan.pulse_error, plan.tail_tol).spin_up_probability());
      },
      evolve_options(plan));
  return series;
}

double sideband_ratio(double nbar) {
  if (!(nbar >= 0.0)) throw DomainError("mean occupation must be >= 0");
  return nbar / (nbar + 1.0);
}

double nbar_from_sideband_ratio(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("sideband ratio must lie in [0, 1)");
  return r / (1.0 - r);
}

}  // namespace cw
