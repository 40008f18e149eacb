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

#include "coupled_wells/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coupled_wells/errors.hpp"
#include "liouvillian.hpp"

namespace cw {
namespace {

void check_tail(const DensityOperator& rho, double tail_tol, Seconds t) {
  for (Mode mode : {Mode::a, Mode::b}) {
    const double top = rho.top_level_population(mode);
    if (top > tail_tol) {
      const int need = FockSpace::required_dimension(std::max(0.0, rho.mean_occupation(mode)), tail_tol);
      throw TruncationError("top Fock level of mode " + std::string(mode == Mode::a ? "a" : "b") + " holds " +
                                std::to_string(top) + " at t = " + std::to_string(t.value()) +
                                " s; raise the truncation (thermal estimate: dimension >= " + std::to_string(need) +
                                ")",
                            need);
    }
  }
}

}  // namespace

Eigen::MatrixXcd ExchangeHamiltonian::matrix(const FockSpace& space) const {
  const int dim = space.dimension();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto s = space.state(i);
    h(i, i) = 0.5 * detuning.value() * (s.n_a - s.n_b);
    if (s.n_a + 1 < space.dim_a() && s.n_b >= 1) {
      const int j = space.index(s.spin, s.n_a + 1, s.n_b - 1);
      const double v = omega_ex.value() * std::sqrt(static_cast<double>((s.n_a + 1) * s.n_b));
      h(j, i) += v;
      h(i, j) += v;
    }
  }
  return h;
}

double generator_rate_scale(const ExchangeHamiltonian& h, const HeatingModel& heating) {
  return std::max({0.5 * std::abs(h.detuning.value()), std::abs(h.omega_ex.value()), heating.ndot_a.value(),
                   heating.ndot_b.value()});
}

Seconds default_time_step(const ExchangeHamiltonian& h, const HeatingModel& heating) {
  const double scale = generator_rate_scale(h, heating);
  return Seconds(scale > 0.0 ? 1.0 / (200.0 * scale) : std::numeric_limits<double>::infinity());
}

Seconds max_time_step(const ExchangeHamiltonian& h, const HeatingModel& heating) {
  const double scale = generator_rate_scale(h, heating);
  return Seconds(scale > 0.0 ? 0.01 / scale : std::numeric_limits<double>::infinity());
}

DensityOperator evolve_sampled(const DensityOperator& rho0, const ExchangeHamiltonian& h, const HeatingModel& heating,
                               std::span<const Seconds> sample_times, const SampleObserver& observer,
                               const EvolveOptions& options) {
  if (heating.ndot_a.value() < 0.0 || heating.ndot_b.value() < 0.0) throw DomainError("heating rates must be >= 0");
  if (!std::is_sorted(sample_times.begin(), sample_times.end())) throw DomainError("sample times must be sorted");
  if (!sample_times.empty() && sample_times.front().value() < 0.0) throw DomainError("sample times must be >= 0");
  if (options.dt.value() < 0.0) throw DomainError("time step must be positive");

  const Seconds dt = options.dt.value() > 0.0 ? options.dt : default_time_step(h, heating);
  if (dt > max_time_step(h, heating)) {
    throw StepSizeError("time step " + std::to_string(dt.value()) + " s exceeds the stability bound " +
                        std::to_string(max_time_step(h, heating).value()) + " s");
  }

  DensityOperator state = rho0;
  const detail::Liouvillian generator(state.layout(), h, heating);
  const auto n = static_cast<Eigen::Index>(state.data().size());
  Eigen::VectorXcd k1(n), k2(n), k3(n), k4(n), probe(n);
  auto apply = [&generator, n](const Eigen::VectorXcd& x, Eigen::VectorXcd& out) {
    generator.apply(std::span<const Complex>(x.data(), n), std::span<Complex>(out.data(), n));
  };

  check_tail(state, options.tail_tol, Seconds(0.0));
  double trace = state.trace().real();
  Seconds now(0.0);
  for (const Seconds target : sample_times) {
    const double interval = (target - now).value();
    if (interval > 0.0) {
      const long steps = std::isfinite(dt.value())
                             ? std::max(1L, static_cast<long>(std::ceil(interval / dt.value() - 1e-9)))
                             : 1L;
      const double step = interval / static_cast<double>(steps);
      Eigen::Map<Eigen::VectorXcd> y(state.data().data(), n);
      for (long s = 0; s < steps; ++s) {
        apply(y, k1);
        probe = y + (0.5 * step) * k1;
        apply(probe, k2);
        probe = y + (0.5 * step) * k2;
        apply(probe, k3);
        probe = y + step * k3;
        apply(probe, k4);
        y += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double next = state.trace().real();
        if (options.stats != nullptr) {
          ++options.stats->steps;
          options.stats->max_trace_drift = std::max(options.stats->max_trace_drift, std::abs(next - trace));
        }
        if (std::abs(next - trace) > options.trace_drift_budget) {
          throw StepSizeError("trace drifted by " + std::to_string(std::abs(next - trace)) +
                              " in one step; reduce the time step");
        }
        y *= trace / next;
      }
      now = target;
    }
    check_tail(state, options.tail_tol, target);
    if (observer) observer(target, state);
  }
  return state;
}

DensityOperator evolve(const DensityOperator& rho0, const ExchangeHamiltonian& h, const HeatingModel& heating,
                       Seconds duration, const EvolveOptions& options) {
  if (duration.value() < 0.0) throw DomainError("duration must be >= 0");
  const Seconds sample[] = {duration};
  return evolve_sampled(rho0, h, heating, sample, {}, options);
}

TimeSeries closed_form_exchange(double nbar_a0, double nbar_b0, RadiansPerSecond omega_ex, QuantaPerSecond ndot,
                                std::span<const Seconds> times) {
  if (nbar_a0 < 0.0 || nbar_b0 < 0.0 || omega_ex.value() < 0.0 || ndot.value() < 0.0) {
    throw DomainError("closed-form exchange inputs must be non-negative");
  }
  TimeSeries series{"n_a_mean", {times.begin(), times.end()}, {}, std::nullopt};
  series.values.reserve(times.size());
  for (const Seconds t : times) {
    const double c = std::cos(omega_ex.value() * t.value());
    const double s = std::sin(omega_ex.value() * t.value());
    series.values.push_back(nbar_a0 * c * c + nbar_b0 * s * s + ndot.value() * t.value());
  }
  return series;
}

Eigen::Matrix2cd heisenberg_mode_swap(RadiansPerSecond omega_ex, Seconds t) {
  const double phase = omega_ex.value() * t.value();
  const Complex c(std::cos(phase), 0.0);
  const Complex s(0.0, -std::sin(phase));
  Eigen::Matrix2cd m;
  m << c, s, s, c;
  return m;
}

double detuned_exchange_probability(RadiansPerSecond omega_ex, RadiansPerSecond delta, Seconds t) {
  const double w = omega_ex.value();
  const double eff = std::sqrt(w * w + 0.25 * delta.value() * delta.value());
  if (eff == 0.0) return 0.0;
  const double s = std::sin(eff * t.value());
  return (w * w) / (eff * eff) * s * s;
}

}  // namespace cw
