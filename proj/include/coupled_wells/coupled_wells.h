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

/* C interface to the coupled-wells simulator. All quantities are SI unless a
 * name says otherwise (frequencies in Hz, angular rates in rad/s). Functions
 * returning cw_status set a thread-local message readable through
 * cw_last_error_message() on failure. Handles are released with the matching
 * *_free function; passing NULL to *_free is a no-op. */
#ifndef COUPLED_WELLS_H
#define COUPLED_WELLS_H

#include <stddef.h>

#if defined(CW_BUILDING_LIBRARY)
#define CW_API __attribute__((visibility("default")))
#else
#define CW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cw_status {
  CW_OK = 0,
  CW_ERR_INVALID_ARGUMENT = 1, /* null pointer, index out of range */
  CW_ERR_DOMAIN = 2,           /* physical precondition violated */
  CW_ERR_INSTABILITY = 3,      /* coupling too strong for bound normal modes */
  CW_ERR_TRUNCATION = 4,       /* Fock truncation too small */
  CW_ERR_STEP_SIZE = 5,        /* integrator step too coarse */
  CW_ERR_IO = 6,
  CW_ERR_INTERNAL = 7
} cw_status;

CW_API const char* cw_version(void);
CW_API const char* cw_status_name(cw_status status);
/* Message of the last failed call on this thread; "" when none. */
CW_API const char* cw_last_error_message(void);
/* Suggested Fock dimension after CW_ERR_TRUNCATION, else 0. */
CW_API int cw_last_error_required_dimension(void);

/* ---- core model ---- */

typedef struct cw_species {
  double mass_kg;
  double charge_c;
} cw_species;

typedef struct cw_trap_config {
  double separation_m;
  double height_m;
  double freq_a_hz;
  double freq_b_hz;
  int shielding; /* nonzero applies the electrode shielding factor */
} cw_trap_config;

typedef struct cw_coupling {
  double kappa_n_per_m; /* without shielding */
  double omega_ex_rad_s;
  double beta;
  double tau_ex_s;
} cw_coupling;

/* Singly ionized 9Be. */
CW_API cw_species cw_species_beryllium9(void);
/* Ion mass in unified atomic mass units, charge in elementary charges. */
CW_API cw_species cw_species_from_atomic(double mass_u, double charge_e);
CW_API void cw_species_to_atomic(const cw_species* species, double* mass_u, double* charge_e);

CW_API cw_status cw_coupling_params(const cw_trap_config* trap, const cw_species* a, const cw_species* b,
                                    cw_coupling* out);
CW_API cw_status cw_shielding_factor(double separation_m, double height_m, double* out);
CW_API cw_status cw_static_frequency_shift(const cw_trap_config* trap, const cw_species* a, const cw_species* b,
                                           double* shift_a_hz, double* shift_b_hz);

/* ---- normal modes ---- */

typedef struct cw_mode_spectrum {
  double f_minus_hz;
  double f_plus_hz;
  double splitting_hz;
} cw_mode_spectrum;

CW_API cw_status cw_normal_modes(const cw_trap_config* trap, const cw_species* a, const cw_species* b,
                                 cw_mode_spectrum* out);

/* freq_b fixed, freq_a = freq_b + detuning over [-half_width, +half_width]. */
typedef struct cw_sweep cw_sweep;
CW_API cw_status cw_sweep_run(const cw_trap_config* trap, const cw_species* a, const cw_species* b,
                              double half_width_hz, int steps, cw_sweep** out);
CW_API size_t cw_sweep_size(const cw_sweep* sweep);
CW_API cw_status cw_sweep_point(const cw_sweep* sweep, size_t i, double* detuning_hz, cw_mode_spectrum* out);
CW_API void cw_sweep_free(cw_sweep* sweep);

/* ---- experiments ---- */

typedef enum cw_ramp { CW_RAMP_INSTANTANEOUS = 0, CW_RAMP_LINEAR = 1 } cw_ramp;

typedef struct cw_experiment_plan {
  cw_trap_config trap;
  cw_species species_a;
  cw_species species_b;
  double ndot_a; /* quanta/s */
  double ndot_b;
  double nbar_a;
  double nbar_b;
  const double* taus_s; /* sorted, not owned */
  size_t n_taus;
  cw_ramp ramp;
  double ramp_time_s;
  double ramp_start_detuning_hz;
  int ramp_segments;
  double pulse_error;
  double tail_tol;
  double dt_s; /* 0 selects the integrator default */
  int headroom;
} cw_experiment_plan;

/* Library defaults; trap is 40 um / 40 um / 4.04 MHz with shielding, both
 * species 9Be+, no heating, no interaction times. */
CW_API void cw_experiment_plan_init(cw_experiment_plan* plan);
CW_API cw_status cw_plan_fock_dimension(const cw_experiment_plan* plan, int with_sideband_quantum, int* out);

typedef struct cw_series cw_series;
CW_API cw_status cw_thermal_exchange(const cw_experiment_plan* plan, cw_series** out);
CW_API cw_status cw_single_quantum(const cw_experiment_plan* plan, cw_series** out);
CW_API cw_status cw_closed_form_exchange(double nbar_a0, double nbar_b0, double omega_ex_rad_s, double ndot,
                                         const double* times_s, size_t n, cw_series** out);
CW_API size_t cw_series_size(const cw_series* series);
CW_API const char* cw_series_label(const cw_series* series);
/* Pointers stay valid until cw_series_free. */
CW_API const double* cw_series_times(const cw_series* series);
CW_API const double* cw_series_values(const cw_series* series);
CW_API void cw_series_free(cw_series* series);

typedef struct cw_fit {
  double period_s;
  double offset;
  double amplitude;
  double phase;
  double rms_residual;
} cw_fit;

CW_API cw_status cw_series_fit_oscillation(const cw_series* series, cw_fit* out);
CW_API cw_status cw_series_contrast(const cw_series* series, double* out);

CW_API cw_status cw_sideband_ratio(double nbar, double* out);
CW_API cw_status cw_nbar_from_sideband_ratio(double ratio, double* out);
CW_API cw_status cw_detuned_exchange_probability(double omega_ex_rad_s, double delta_rad_s, double t_s, double* out);

/* ---- density operators ---- */

typedef struct cw_state cw_state;

typedef struct cw_state_diagnostics {
  double trace_re;
  double trace_im;
  double hermiticity_defect;
  double min_eigenvalue;
} cw_state_diagnostics;

CW_API cw_status cw_state_thermal(int dim_a, int dim_b, double nbar_a, double nbar_b, double tail_tol, cw_state** out);
CW_API cw_status cw_state_fock(int dim_a, int dim_b, int n_a, int n_b, cw_state** out);
/* In place; a failed call leaves the state unchanged. */
CW_API cw_status cw_state_evolve(cw_state* state, double omega_ex_rad_s, double detuning_rad_s, double ndot_a,
                                 double ndot_b, double duration_s, double dt_s);
/* mode: 0 for a, 1 for b */
CW_API cw_status cw_state_mean_occupation(const cw_state* state, int mode, double* out);
CW_API cw_status cw_state_diagnose(const cw_state* state, cw_state_diagnostics* out);
CW_API cw_status cw_state_write_csv(const cw_state* state, const char* path);
CW_API void cw_state_free(cw_state* state);

/* ---- regression ---- */

typedef struct cw_report cw_report;

typedef struct cw_check {
  int criterion;
  const char* name; /* owned by the report */
  double expected;
  double computed;
  double tolerance;
  const char* kind; /* "within", "at_most" or "less_than" */
  int passed;
} cw_check;

/* criteria may be NULL to run 1-7. omega_ex_scale != 1 injects a fault. */
CW_API cw_status cw_regression_run(double omega_ex_scale, const int* criteria, size_t n_criteria,
                                   int check_determinism, cw_report** out);
CW_API int cw_report_passed(const cw_report* report);
CW_API int cw_report_criterion_passed(const cw_report* report, int criterion);
CW_API size_t cw_report_size(const cw_report* report);
CW_API cw_status cw_report_check(const cw_report* report, size_t i, cw_check* out);
/* Owned by the report. */
CW_API const char* cw_report_format(const cw_report* report);
CW_API void cw_report_free(cw_report* report);

#ifdef __cplusplus
}
#endif

#endif /* COUPLED_WELLS_H */
