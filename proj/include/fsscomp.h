// Copyright 2026 The fsscomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FSSCOMP_H
#define FSSCOMP_H

/* C interface to the fsscomp library. Every call returns an fss_status; on
 * failure fss_last_error() describes the problem for the calling thread.
 * Strings handed out through char ** must be released with fss_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(FSSCOMP_BUILDING)
#define FSS_API __declspec(dllexport)
#else
#define FSS_API __declspec(dllimport)
#endif
#else
#define FSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fss_status {
    FSS_OK = 0,
    FSS_TOLERANCE_FAILURE = 1,
    FSS_CONFIG_ERROR = 2,
    FSS_PHYSICS_ERROR = 3,
    FSS_NUMERICAL_ERROR = 4,
    FSS_INVALID_ARGUMENT = 5,
    FSS_INTERNAL_ERROR = 6
} fss_status;

typedef struct fss_config fss_config;
typedef struct fss_result fss_result;
typedef struct fss_oracle_report fss_oracle_report;

typedef struct fss_result_row {
    const char *parameter; /* owned by the fss_result */
    double value;
    double fidelity_raw;
    double fidelity_opt;
    double concurrence;
    double constant_phase_rad;
    double residual_kappa1;
    double residual_kappa2;
    double epsilon_amp;
    double b1_v_per_ns;
    double b2_v_per_ns;
    double max_voltage_v;
} fss_result_row;

typedef struct fss_feasibility_report {
    double fss_angular_frequency;
    double fss_frequency_mhz;
    double delay_coefficient;
    double b1_v_per_ns;
    double b2_v_per_ns;
    double scheme2_b_v_per_ns;
    double ramp_duration_ns;
    double max_voltage_v;
    int series_cells;
    double per_cell_rate_v_per_ns;
    double per_cell_max_voltage_v;
} fss_feasibility_report;

typedef struct fss_oracle_entry {
    const char *name; /* owned by the report */
    double value;
    double tolerance;
    int passed;
} fss_oracle_entry;

FSS_API const char *fss_version(void);
FSS_API const char *fss_last_error(void);
FSS_API void fss_string_free(char *s);

FSS_API fss_status fss_config_default(fss_config **out);
FSS_API fss_status fss_config_parse(const char *json_text, fss_config **out);
FSS_API void fss_config_free(fss_config *cfg);
FSS_API fss_status fss_config_to_json(const fss_config *cfg, char **out);
/* Configured output path, "" when unset. */
FSS_API const char *fss_config_output_path(const fss_config *cfg);
FSS_API int fss_config_has_sweep(const fss_config *cfg);

/* Single run of the configured scheme. */
FSS_API fss_status fss_simulate(const fss_config *cfg, fss_result **out);
/* Sweep over the configured parameter range using up to `jobs` threads. */
FSS_API fss_status fss_sweep(const fss_config *cfg, int jobs, fss_result **out);
FSS_API void fss_result_free(fss_result *result);
FSS_API size_t fss_result_size(const fss_result *result);
FSS_API fss_status fss_result_row_at(const fss_result *result, size_t index, fss_result_row *out);
FSS_API size_t fss_result_warning_count(const fss_result *result);
FSS_API const char *fss_result_warning(const fss_result *result, size_t index);
FSS_API fss_status fss_result_csv(const fss_result *result, const fss_config *cfg,
                                  const char *command, char **out);

FSS_API fss_status fss_feasibility(const fss_config *cfg, fss_feasibility_report *out);

/* Returns FSS_TOLERANCE_FAILURE (with *out filled) when any check fails.
 * scale_corruption multiplies the V-mode scale factor used by the closed form;
 * 1.0 leaves it untouched. */
FSS_API fss_status fss_oracle_check(const fss_config *cfg, double scale_corruption,
                                    fss_oracle_report **out);
FSS_API void fss_oracle_report_free(fss_oracle_report *report);
FSS_API size_t fss_oracle_report_size(const fss_oracle_report *report);
FSS_API fss_status fss_oracle_report_entry(const fss_oracle_report *report, size_t index,
                                           fss_oracle_entry *out);

#ifdef __cplusplus
}
#endif

#endif
