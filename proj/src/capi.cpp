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

#include "coupled_wells/coupled_wells.h"

#include <exception>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "coupled_wells/constants.hpp"
#include "coupled_wells/core_model.hpp"
#include "coupled_wells/density_operator.hpp"
#include "coupled_wells/dynamics.hpp"
#include "coupled_wells/errors.hpp"
#include "coupled_wells/normal_modes.hpp"
#include "coupled_wells/oscillation_fit.hpp"
#include "coupled_wells/protocol.hpp"
#include "coupled_wells/regression.hpp"

struct cw_sweep {
  cw::CrossingSweep sweep;
};

struct cw_series {
  std::string label;
  std::vector<double> times;
  std::vector<double> values;
  cw::TimeSeries series;
};

struct cw_state {
  cw::DensityOperator rho;
};

struct cw_report {
  cw::RegressionReport report;
  std::string table;
};

namespace {

thread_local std::string g_error;
thread_local int g_required_dimension = 0;

cw_status fail(cw_status status, const std::string& message) {
  g_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
cw_status guarded(Fn&& fn) {
  g_error.clear();
  g_required_dimension = 0;
  try {
    fn();
    return CW_OK;
  } catch (const cw::TruncationError& e) {
    g_required_dimension = e.required_dimension();
    return fail(CW_ERR_TRUNCATION, e.what());
  } catch (const cw::InstabilityError& e) {
    return fail(CW_ERR_INSTABILITY, e.what());
  } catch (const cw::StepSizeError& e) {
    return fail(CW_ERR_STEP_SIZE, e.what());
  } catch (const cw::DomainError& e) {
    return fail(CW_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CW_ERR_INTERNAL, "unknown error");
  }
}

#define CW_REQUIRE(ptr)                                                        \
  do {                                                                         \
    if ((ptr) == nullptr) return fail(CW_ERR_INVALID_ARGUMENT, #ptr " is null"); \
  } while (0)

cw::IonSpecies species(const cw_species& s) { return {cw::Kilograms(s.mass_kg), cw::Coulombs(s.charge_c)}; }

cw::TrapConfig trap(const cw_trap_config& t) {
  return {cw::Meters(t.separation_m), cw::Meters(t.height_m), cw::Hertz(t.freq_a_hz), cw::Hertz(t.freq_b_hz),
          t.shielding != 0};
}

cw::ExperimentPlan plan(const cw_experiment_plan& p) {
  if (p.n_taus > 0 && p.taus_s == nullptr) throw cw::DomainError("taus_s is null with n_taus > 0");
  cw::ExperimentPlan out{trap(p.trap),
                         species(p.species_a),
                         species(p.species_b),
                         {cw::QuantaPerSecond(p.ndot_a), cw::QuantaPerSecond(p.ndot_b)},
                         p.nbar_a,
                         p.nbar_b,
                         {}};
  out.taus.reserve(p.n_taus);
  for (std::size_t i = 0; i < p.n_taus; ++i) out.taus.emplace_back(p.taus_s[i]);
  out.ramp = p.ramp == CW_RAMP_LINEAR ? cw::RampModel::linear : cw::RampModel::instantaneous;
  out.ramp_time = cw::Seconds(p.ramp_time_s);
  out.ramp_start_detuning = cw::Hertz(p.ramp_start_detuning_hz);
  out.ramp_segments = p.ramp_segments;
  out.pulse_error = p.pulse_error;
  out.tail_tol = p.tail_tol;
  out.dt = cw::Seconds(p.dt_s);
  out.headroom = p.headroom;
  return out;
}

cw_series* wrap(cw::TimeSeries s) {
  auto* out = new cw_series;
  out->label = s.label;
  out->times.reserve(s.size());
  for (const auto t : s.times) out->times.push_back(t.value());
  out->values = s.values;
  out->series = std::move(s);
  return out;
}

}  // namespace

extern "C" {

const char* cw_version(void) { return "0.1.0"; }

const char* cw_status_name(cw_status status) {
  switch (status) {
    case CW_OK:
      return "ok";
    case CW_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case CW_ERR_DOMAIN:
      return "domain error";
    case CW_ERR_INSTABILITY:
      return "instability";
    case CW_ERR_TRUNCATION:
      return "truncation error";
    case CW_ERR_STEP_SIZE:
      return "step size error";
    case CW_ERR_IO:
      return "i/o error";
    case CW_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* cw_last_error_message(void) { return g_error.c_str(); }

int cw_last_error_required_dimension(void) { return g_required_dimension; }

cw_species cw_species_beryllium9(void) {
  const auto be = cw::IonSpecies::beryllium9();
  return {be.mass().value(), be.charge().value()};
}

cw_species cw_species_from_atomic(double mass_u, double charge_e) {
  return {mass_u * cw::constants::atomic_mass_unit, charge_e * cw::constants::elementary_charge};
}

void cw_species_to_atomic(const cw_species* species, double* mass_u, double* charge_e) {
  if (species == nullptr) return;
  if (mass_u != nullptr) *mass_u = species->mass_kg / cw::constants::atomic_mass_unit;
  if (charge_e != nullptr) *charge_e = species->charge_c / cw::constants::elementary_charge;
}

cw_status cw_coupling_params(const cw_trap_config* t, const cw_species* a, const cw_species* b, cw_coupling* out) {
  CW_REQUIRE(t);
  CW_REQUIRE(a);
  CW_REQUIRE(b);
  CW_REQUIRE(out);
  return guarded([&] {
    const auto c = cw::coupling_params(trap(*t), species(*a), species(*b));
    *out = {c.kappa.value(), c.omega_ex.value(), c.beta, c.tau_ex.value()};
  });
}

cw_status cw_shielding_factor(double separation_m, double height_m, double* out) {
  CW_REQUIRE(out);
  return guarded([&] { *out = cw::shielding_factor(cw::Meters(separation_m), cw::Meters(height_m)); });
}

cw_status cw_static_frequency_shift(const cw_trap_config* t, const cw_species* a, const cw_species* b,
                                   double* shift_a_hz, double* shift_b_hz) {
  CW_REQUIRE(t);
  CW_REQUIRE(a);
  CW_REQUIRE(b);
  CW_REQUIRE(shift_a_hz);
  CW_REQUIRE(shift_b_hz);
  return guarded([&] {
    const auto s = cw::static_frequency_shift(trap(*t), species(*a), species(*b));
    *shift_a_hz = s.well_a.value();
    *shift_b_hz = s.well_b.value();
  });
}

cw_status cw_normal_modes(const cw_trap_config* t, const cw_species* a, const cw_species* b, cw_mode_spectrum* out) {
  CW_REQUIRE(t);
  CW_REQUIRE(a);
  CW_REQUIRE(b);
  CW_REQUIRE(out);
  return guarded([&] {
    const auto m = cw::normal_mode_frequencies(trap(*t), species(*a), species(*b));
    *out = {m.f_minus.value(), m.f_plus.value(), m.splitting.value()};
  });
}

cw_status cw_sweep_run(const cw_trap_config* t, const cw_species* a, const cw_species* b, double half_width_hz,
                       int steps, cw_sweep** out) {
  CW_REQUIRE(t);
  CW_REQUIRE(a);
  CW_REQUIRE(b);
  CW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new cw_sweep{
        cw::avoided_crossing_sweep(trap(*t), species(*a), species(*b), cw::Hertz(half_width_hz), steps)};
  });
}

size_t cw_sweep_size(const cw_sweep* sweep) { return sweep == nullptr ? 0 : sweep->sweep.spectra.size(); }

cw_status cw_sweep_point(const cw_sweep* sweep, size_t i, double* detuning_hz, cw_mode_spectrum* out) {
  CW_REQUIRE(sweep);
  CW_REQUIRE(detuning_hz);
  CW_REQUIRE(out);
  if (i >= sweep->sweep.spectra.size()) return fail(CW_ERR_INVALID_ARGUMENT, "sweep index out of range");
  const auto& m = sweep->sweep.spectra[i];
  *detuning_hz = sweep->sweep.detunings[i].value();
  *out = {m.f_minus.value(), m.f_plus.value(), m.splitting.value()};
  return CW_OK;
}

void cw_sweep_free(cw_sweep* sweep) { delete sweep; }

void cw_experiment_plan_init(cw_experiment_plan* p) {
  if (p == nullptr) return;
  const cw::ExperimentPlan defaults{
      cw::TrapConfig(cw::micrometers(40.0), cw::micrometers(40.0), cw::megahertz(4.04), cw::megahertz(4.04)),
      cw::IonSpecies::beryllium9(),
      cw::IonSpecies::beryllium9(),
      {},
      0.0,
      0.0,
      {}};
  *p = {};
  p->trap = {defaults.trap.separation().value(), defaults.trap.height().value(), defaults.trap.freq_a().value(),
             defaults.trap.freq_b().value(), 1};
  p->species_a = p->species_b = cw_species_beryllium9();
  p->ramp = CW_RAMP_INSTANTANEOUS;
  p->ramp_time_s = defaults.ramp_time.value();
  p->ramp_start_detuning_hz = defaults.ramp_start_detuning.value();
  p->ramp_segments = defaults.ramp_segments;
  p->pulse_error = defaults.pulse_error;
  p->tail_tol = defaults.tail_tol;
  p->dt_s = defaults.dt.value();
  p->headroom = defaults.headroom;
}

cw_status cw_plan_fock_dimension(const cw_experiment_plan* p, int with_sideband_quantum, int* out) {
  CW_REQUIRE(p);
  CW_REQUIRE(out);
  return guarded([&] {
    const auto resolved = plan(*p);
    resolved.validate();
    *out = resolved.fock_dimension(with_sideband_quantum != 0);
  });
}

cw_status cw_thermal_exchange(const cw_experiment_plan* p, cw_series** out) {
  CW_REQUIRE(p);
  CW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = wrap(cw::thermal_exchange_experiment(plan(*p))); });
}

cw_status cw_single_quantum(const cw_experiment_plan* p, cw_series** out) {
  CW_REQUIRE(p);
  CW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = wrap(cw::single_quantum_experiment(plan(*p))); });
}

cw_status cw_closed_form_exchange(double nbar_a0, double nbar_b0, double omega_ex_rad_s, double ndot,
                                  const double* times_s, size_t n, cw_series** out) {
  CW_REQUIRE(out);
  *out = nullptr;
  if (n > 0 && times_s == nullptr) return fail(CW_ERR_INVALID_ARGUMENT, "times_s is null");
  return guarded([&] {
    std::vector<cw::Seconds> times;
    times.reserve(n);
    for (std::size_t i = 0; i < n; ++i) times.emplace_back(times_s[i]);
    *out = wrap(cw::closed_form_exchange(nbar_a0, nbar_b0, cw::RadiansPerSecond(omega_ex_rad_s),
                                         cw::QuantaPerSecond(ndot), times));
  });
}

size_t cw_series_size(const cw_series* series) { return series == nullptr ? 0 : series->values.size(); }
const char* cw_series_label(const cw_series* series) { return series == nullptr ? "" : series->label.c_str(); }
const double* cw_series_times(const cw_series* series) { return series == nullptr ? nullptr : series->times.data(); }
const double* cw_series_values(const cw_series* series) {
  return series == nullptr ? nullptr : series->values.data();
}
void cw_series_free(cw_series* series) { delete series; }

cw_status cw_series_fit_oscillation(const cw_series* series, cw_fit* out) {
  CW_REQUIRE(series);
  CW_REQUIRE(out);
  return guarded([&] {
    const auto f = cw::fit_oscillation(series->series);
    *out = {f.period.value(), f.offset, f.amplitude, f.phase, f.rms_residual};
  });
}

cw_status cw_series_contrast(const cw_series* series, double* out) {
  CW_REQUIRE(series);
  CW_REQUIRE(out);
  *out = cw::contrast(series->series);
  return CW_OK;
}

cw_status cw_sideband_ratio(double nbar, double* out) {
  CW_REQUIRE(out);
  return guarded([&] { *out = cw::sideband_ratio(nbar); });
}

cw_status cw_nbar_from_sideband_ratio(double ratio, double* out) {
  CW_REQUIRE(out);
  return guarded([&] { *out = cw::nbar_from_sideband_ratio(ratio); });
}

cw_status cw_detuned_exchange_probability(double omega_ex_rad_s, double delta_rad_s, double t_s, double* out) {
  CW_REQUIRE(out);
  return guarded([&] {
    *out = cw::detuned_exchange_probability(cw::RadiansPerSecond(omega_ex_rad_s), cw::RadiansPerSecond(delta_rad_s),
                                            cw::Seconds(t_s));
  });
}

cw_status cw_state_thermal(int dim_a, int dim_b, double nbar_a, double nbar_b, double tail_tol, cw_state** out) {
  CW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const cw::FockSpace space(dim_a, dim_b);
    *out = new cw_state{cw::DensityOperator::thermal(space, nbar_a, nbar_b, std::nullopt, tail_tol)};
  });
}

cw_status cw_state_fock(int dim_a, int dim_b, int n_a, int n_b, cw_state** out) {
  CW_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const cw::FockSpace space(dim_a, dim_b);
    *out = new cw_state{cw::DensityOperator::fock(space, n_a, n_b)};
  });
}

cw_status cw_state_evolve(cw_state* state, double omega_ex_rad_s, double detuning_rad_s, double ndot_a,
                          double ndot_b, double duration_s, double dt_s) {
  CW_REQUIRE(state);
  return guarded([&] {
    cw::EvolveOptions options;
    options.dt = cw::Seconds(dt_s);
    state->rho = cw::evolve(state->rho, {cw::RadiansPerSecond(omega_ex_rad_s), cw::RadiansPerSecond(detuning_rad_s)},
                            {cw::QuantaPerSecond(ndot_a), cw::QuantaPerSecond(ndot_b)}, cw::Seconds(duration_s),
                            options);
  });
}

cw_status cw_state_mean_occupation(const cw_state* state, int mode, double* out) {
  CW_REQUIRE(state);
  CW_REQUIRE(out);
  if (mode != 0 && mode != 1) return fail(CW_ERR_INVALID_ARGUMENT, "mode must be 0 (a) or 1 (b)");
  *out = state->rho.mean_occupation(mode == 0 ? cw::Mode::a : cw::Mode::b);
  return CW_OK;
}

cw_status cw_state_diagnose(const cw_state* state, cw_state_diagnostics* out) {
  CW_REQUIRE(state);
  CW_REQUIRE(out);
  return guarded([&] {
    const auto tr = state->rho.trace();
    *out = {tr.real(), tr.imag(), state->rho.hermiticity_defect(), state->rho.min_eigenvalue()};
  });
}

cw_status cw_state_write_csv(const cw_state* state, const char* path) {
  CW_REQUIRE(state);
  CW_REQUIRE(path);
  g_error.clear();
  std::ofstream file(path, std::ios::binary);
  if (!file) return fail(CW_ERR_IO, std::string("cannot open ") + path + " for writing");
  state->rho.write_csv(file);
  file.flush();
  if (!file) return fail(CW_ERR_IO, std::string("write to ") + path + " failed");
  return CW_OK;
}

void cw_state_free(cw_state* state) { delete state; }

cw_status cw_regression_run(double omega_ex_scale, const int* criteria, size_t n_criteria, int check_determinism,
                            cw_report** out) {
  CW_REQUIRE(out);
  *out = nullptr;
  if (n_criteria > 0 && criteria == nullptr) return fail(CW_ERR_INVALID_ARGUMENT, "criteria is null");
  return guarded([&] {
    cw::RegressionOptions options;
    options.omega_ex_scale = omega_ex_scale;
    options.criteria.assign(criteria, criteria + n_criteria);
    options.check_determinism = check_determinism != 0;
    auto* report = new cw_report{cw::run_regression(options), {}};
    report->table = report->report.format();
    *out = report;
  });
}

int cw_report_passed(const cw_report* report) { return report != nullptr && report->report.passed() ? 1 : 0; }

int cw_report_criterion_passed(const cw_report* report, int criterion) {
  return report != nullptr && report->report.criterion_passed(criterion) ? 1 : 0;
}

size_t cw_report_size(const cw_report* report) { return report == nullptr ? 0 : report->report.checks.size(); }

cw_status cw_report_check(const cw_report* report, size_t i, cw_check* out) {
  CW_REQUIRE(report);
  CW_REQUIRE(out);
  if (i >= report->report.checks.size()) return fail(CW_ERR_INVALID_ARGUMENT, "check index out of range");
  const auto& c = report->report.checks[i];
  *out = {c.criterion, c.name.c_str(), c.expected, c.computed, c.tolerance, cw::to_string(c.kind), c.passed ? 1 : 0};
  return CW_OK;
}

const char* cw_report_format(const cw_report* report) { return report == nullptr ? "" : report->table.c_str(); }

void cw_report_free(cw_report* report) { delete report; }

}  // extern "C"
