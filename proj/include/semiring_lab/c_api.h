/* Copyright 2026 The semiring-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEMIRING_LAB_C_API_H
#define SEMIRING_LAB_C_API_H

/* C interface to semiring-lab. Every call returns a slab_status; on failure
 * slab_last_error() describes the problem for the calling thread. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with slab_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(SLAB_BUILDING_LIBRARY)
#define SLAB_API __attribute__((visibility("default")))
#else
#define SLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slab_status {
    SLAB_OK = 0,
    SLAB_ERR_PARSE = 1,
    SLAB_ERR_AXIOM = 2,
    SLAB_ERR_BAD_PARAMS = 3,
    SLAB_ERR_CAP = 4,
    SLAB_ERR_BUDGET = 5,
    SLAB_ERR_IO = 6,
    SLAB_ERR_NULL = 7,
    SLAB_ERR_INTERNAL = 8
} slab_status;

typedef enum slab_format { SLAB_FORMAT_JSON = 0, SLAB_FORMAT_TEXT = 1 } slab_format;

typedef struct slab_semiring slab_semiring;

typedef struct slab_classify_options {
    unsigned degree_bound;
    size_t lattice_cap;
    int parallel;
    unsigned threads;
    uint64_t seed;
    int timing;
} slab_classify_options;

SLAB_API const char* slab_version(void);
SLAB_API const char* slab_status_name(slab_status status);
/* Message of the last failed call on this thread; "" after a success. */
SLAB_API const char* slab_last_error(void);
SLAB_API void slab_string_free(char* s);

/* Defaults: degree bound 3, lattice cap 12, serial. */
SLAB_API void slab_classify_options_init(slab_classify_options* options);

/* Accepts explicit tables or a {"family", "params"} catalog document. */
SLAB_API slab_status slab_semiring_from_json(const char* json, slab_semiring** out);
SLAB_API slab_status slab_semiring_from_file(const char* path, slab_semiring** out);
/* expr like "nil_chain" or "b_n_i(4,2)"; keys/values supply extra parameters
 * and may be NULL when count is 0. */
SLAB_API slab_status slab_semiring_from_catalog(const char* expr, const char* const* keys,
                                                const char* const* values, size_t count,
                                                slab_semiring** out);
SLAB_API void slab_semiring_free(slab_semiring* s);

SLAB_API size_t slab_semiring_size(const slab_semiring* s);
SLAB_API slab_status slab_semiring_to_json(const slab_semiring* s, char** out);

/* options may be NULL for defaults. */
SLAB_API slab_status slab_classify(const slab_semiring* s, const slab_classify_options* options,
                                   slab_format format, char** out);
/* Re-renders a JSON report produced by slab_classify. */
SLAB_API slab_status slab_report_render(const char* report_json, slab_format format, char** out);

/* Runs the golden suite. filter is NULL or a comma-separated list of id
 * prefixes. Writes a JSON array of {id, description, pass, detail, seconds}
 * and sets *all_pass. */
SLAB_API slab_status slab_golden_suite(const char* filter, int parallel, char** out, int* all_pass);
/* JSON array of row ids. */
SLAB_API slab_status slab_golden_row_ids(char** out);

#ifdef __cplusplus
}
#endif

#endif /* SEMIRING_LAB_C_API_H */
