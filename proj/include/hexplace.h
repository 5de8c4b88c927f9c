/*
 Copyright 2026 The hexplace authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

/*
 C interface to the hexplace simulation core.

 Conventions:
  - Every fallible call returns an hxp_status; HXP_OK is zero.
  - Out-parameters are written only on HXP_OK.
  - On failure, hxp_last_error_message() returns a thread-local description
    of the most recent error on the calling thread.
  - Strings returned through char** out-parameters are NUL-terminated,
    heap-allocated, and must be released with hxp_string_free().
  - Handles are released with their matching *_free() function; freeing
    NULL is a no-op.
  - A scenario handle is immutable after construction except through
    hxp_scenario_set_max_steps(), so concurrent hxp_run() calls on one
    scenario from multiple threads are safe once mutation has stopped.
*/

#ifndef HEXPLACE_H_
#define HEXPLACE_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hxp_status {
    HXP_OK = 0,
    /* A NULL pointer or out-of-domain argument. */
    HXP_ERROR_INVALID_ARGUMENT = 1,
    /* Scenario text is not well-formed JSON or violates the schema. */
    HXP_ERROR_PARSE = 2,
    /* Scenario is well-formed but semantically invalid. */
    HXP_ERROR_VALIDATION = 3,
    /* Preset name is not one of the published preset names. */
    HXP_ERROR_UNKNOWN_PRESET = 4,
    HXP_ERROR_OUT_OF_MEMORY = 5,
    /* Unexpected internal failure; see hxp_last_error_message(). */
    HXP_ERROR_INTERNAL = 6
} hxp_status;

/* An immutable, validated scenario configuration. */
typedef struct hxp_scenario hxp_scenario;

/* The complete output of one simulation run. */
typedef struct hxp_result hxp_result;

typedef struct hxp_summary {
    uint64_t initial_population;
    uint64_t simulation_period;
    uint64_t total_immune;
    uint64_t total_dead;
    /* 1 when the run stopped at the step cap with infections remaining. */
    int truncated;
} hxp_summary;

/* Library semantic version, e.g. "1.0.0". Static storage; do not free. */
const char* hxp_version_string(void);

/* Symbolic name for a status code, e.g. "HXP_ERROR_PARSE". Static storage. */
const char* hxp_status_name(hxp_status status);

/*
 Message for the most recent failure on the calling thread, or "" if no
 failure has occurred. Valid until the next failing hxp_* call on the same
 thread. Static storage; do not free.
*/
const char* hxp_last_error_message(void);

/* Parses and validates a scenario from JSON text. */
hxp_status hxp_scenario_parse(const char* json_text, hxp_scenario** out_scenario);

/*
 Builds one of the published honeycomb presets by name.
 hxp_preset_count()/hxp_preset_name() enumerate the valid names.
*/
hxp_status hxp_scenario_from_preset(const char* name, hxp_scenario** out_scenario);

/* Number of published preset names. */
size_t hxp_preset_count(void);

/* Preset name at index, or NULL if index is out of range. Static storage. */
const char* hxp_preset_name(size_t index);

/* Serializes the scenario to canonical JSON text. */
hxp_status hxp_scenario_to_json(const hxp_scenario* scenario, char** out_json);

/* Overrides the scenario's step cap. max_steps must be at least 1. */
hxp_status hxp_scenario_set_max_steps(hxp_scenario* scenario, uint64_t max_steps);

void hxp_scenario_free(hxp_scenario* scenario);

/*
 Runs the scenario to completion with the given seed. Identical
 (scenario, seed) pairs produce byte-identical outputs.
*/
hxp_status hxp_run(const hxp_scenario* scenario, uint64_t seed, hxp_result** out_result);

/* Copies the run's summary counters into *out_summary. */
hxp_status hxp_result_summary(const hxp_result* result, hxp_summary* out_summary);

/* Renders the per-step, per-region time series as CSV text. */
hxp_status hxp_result_timeseries_csv(const hxp_result* result, char** out_csv);

/* Renders the summary as JSON text. */
hxp_status hxp_result_summary_json(const hxp_result* result, char** out_json);

void hxp_result_free(hxp_result* result);

/* Releases a string returned through any char** out-parameter. */
void hxp_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEXPLACE_H_ */
