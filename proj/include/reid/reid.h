// Copyright 2026 The reid Authors
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

/* C interface to the reid library. Every function that can fail returns a
 * reid_status; on failure reid_last_error() describes the problem. Handles are
 * opaque and owned by the caller, who releases them with the matching _free
 * function. Handles are immutable after creation and may be shared between
 * threads; the last-error message is per thread. */

#ifndef REID_REID_H_
#define REID_REID_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(REID_BUILDING_LIBRARY)
#define REID_API __declspec(dllexport)
#else
#define REID_API __declspec(dllimport)
#endif
#elif defined(__GNUC__)
#define REID_API __attribute__((visibility("default")))
#else
#define REID_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum reid_status {
  REID_OK = 0,
  REID_E_INVALID_ARGUMENT = 1, /* bad input: unknown variable, out-of-range value */
  REID_E_CONFIG = 2,           /* malformed configuration */
  REID_E_IO = 3,
  REID_E_PARSE = 4,            /* malformed data file */
  REID_E_INCONSISTENT_AGES = 5,
  REID_E_VERIFICATION = 6,     /* oracle cross-check failed */
  REID_E_INTERNAL = 7
} reid_status;

typedef struct reid_config reid_config;
typedef struct reid_dataset reid_dataset;
typedef struct reid_result reid_result;

REID_API const char* reid_version(void);
REID_API const char* reid_status_name(reid_status status);
/* Message of the last failed call on this thread; "" if none. */
REID_API const char* reid_last_error(void);

/* ---- configuration ---------------------------------------------------- */

/* Parses a JSON run configuration. Relative paths resolve against base_dir
 * (NULL means the current directory). */
REID_API reid_status reid_config_parse(const char* json_text, const char* base_dir,
                                       reid_config** out);
REID_API void reid_config_free(reid_config* config);

/* ---- commands --------------------------------------------------------- */

/* command is one of "prep", "assess", "simulate", "oracle". On REID_OK and on
 * REID_E_VERIFICATION *out holds the result. */
REID_API reid_status reid_run(const reid_config* config, const char* command, reid_result** out);
REID_API const char* reid_result_output(const reid_result* result);
REID_API const char* reid_result_summary(const reid_result* result);
REID_API size_t reid_result_warning_count(const reid_result* result);
REID_API const char* reid_result_warning(const reid_result* result, size_t index);
REID_API void reid_result_free(reid_result* result);

/* ---- datasets and measures -------------------------------------------- */

/* Loads a CSV using the schema and id column of config. */
REID_API reid_status reid_dataset_load_csv(const char* path, const reid_config* config,
                                           reid_dataset** out);
REID_API void reid_dataset_free(reid_dataset* dataset);
REID_API size_t reid_dataset_num_rows(const reid_dataset* dataset);
REID_API size_t reid_dataset_num_variables(const reid_dataset* dataset);
/* Respondent id of a row; NULL when out of range. */
REID_API const char* reid_dataset_id(const reid_dataset* dataset, size_t row);

/* n_match for every row through the index; counts_out has num_rows slots. */
REID_API reid_status reid_n_match(const reid_dataset* dataset, const char* const* variables,
                                  size_t n_variables, int require_observed_overlap,
                                  size_t* counts_out);
/* Same values through the per-row reference scan. */
REID_API reid_status reid_n_match_reference(const reid_dataset* dataset,
                                            const char* const* variables, size_t n_variables,
                                            int require_observed_overlap, size_t* counts_out);
/* Anonymity-set size k per row after listwise deletion; deleted rows get 0. */
REID_API reid_status reid_k_sizes(const reid_dataset* dataset, const char* const* variables,
                                  size_t n_variables, size_t* sizes_out);

/* theta = n1*pi / (n1*pi + 2*(1-pi)*n2). *defined is 0 when the denominator
 * vanishes; *reliable applies the min_n1 policy. */
REID_API reid_status reid_theta(uint64_t n1, double n2, double pi, uint64_t min_n1,
                                double* value, int* defined, int* reliable);

/* Month-of-birth estimate from n monthly observations. age_observed[i] == 0
 * marks a missing age. months_out receives up to two months, *count_out the
 * number written. */
REID_API reid_status reid_estimate_birth_month(const int* years, const int* months,
                                               const int64_t* ages, const int* age_observed,
                                               size_t n, int* months_out, size_t* count_out);

#ifdef __cplusplus
}
#endif

#endif /* REID_REID_H_ */
