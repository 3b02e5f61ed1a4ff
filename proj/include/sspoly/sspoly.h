/*
   Copyright 2026 The sspoly Authors

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
 * C interface to sspoly. All objects are opaque handles created and destroyed
 * through this header; every fallible call returns an sspoly_status and
 * leaves a message for sspoly_last_error() on the calling thread.
 */
#ifndef SSPOLY_SSPOLY_H
#define SSPOLY_SSPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SSPOLY_API __declspec(dllexport)
#else
#define SSPOLY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define SSPOLY_SCHEMA_VERSION 1

typedef enum sspoly_status {
  SSPOLY_OK = 0,
  SSPOLY_ERR_INVALID_ARGUMENT = 1,
  SSPOLY_ERR_NOT_IRREDUCIBLE = 2,
  SSPOLY_ERR_IDEAL_IS_T = 3,
  SSPOLY_ERR_NOT_MONIC = 4,
  SSPOLY_ERR_LEVEL_MISMATCH = 5,
  SSPOLY_ERR_SEARCH_SPACE_TOO_LARGE = 6,
  SSPOLY_ERR_RING_MISMATCH = 7,
  SSPOLY_ERR_SYMBOLIC_COEFFICIENTS = 8,
  SSPOLY_ERR_K_TOO_LARGE = 9,
  SSPOLY_ERR_CAP_EXCEEDED = 10,
  SSPOLY_ERR_EVEN_CHARACTERISTIC = 11,
  SSPOLY_ERR_INDEX_AT_D = 12,
  SSPOLY_ERR_BRACKET_VANISHES = 13,
  SSPOLY_ERR_NOT_IN_OMEGA = 14,
  SSPOLY_ERR_SPLIT_DEFECT = 15,
  SSPOLY_ERR_NON_INTEGER_GENUS = 16,
  SSPOLY_ERR_INTERNAL = 17
} sspoly_status;

typedef struct sspoly_config sspoly_config;
typedef struct sspoly_bundle sspoly_bundle;
typedef struct sspoly_tower sspoly_tower;

SSPOLY_API const char* sspoly_version(void);
/* Name of a status, e.g. "IdealIsT"; "OK" for SSPOLY_OK. */
SSPOLY_API const char* sspoly_status_name(sspoly_status status);
/* Message of the last failed call on this thread; "" if none. */
SSPOLY_API const char* sspoly_last_error(void);

/* Run configuration. Defaults: q = 2, p = "auto:1", nmax = 12, all checks,
 * scan cap 2^24, one job, no timings. */
SSPOLY_API sspoly_status sspoly_config_create(sspoly_config** out);
SSPOLY_API void sspoly_config_destroy(sspoly_config* config);
SSPOLY_API sspoly_status sspoly_config_set_q(sspoly_config* config, uint64_t q);
/* Ascending F_q element codes "c0,c1,...,cd", or "auto:d". */
SSPOLY_API sspoly_status sspoly_config_set_p(sspoly_config* config, const char* text);
SSPOLY_API sspoly_status sspoly_config_set_nmax(sspoly_config* config, unsigned nmax);
/* Comma-separated check groups; NULL or "" selects all. */
SSPOLY_API sspoly_status sspoly_config_set_checks(sspoly_config* config, const char* checks);
SSPOLY_API sspoly_status sspoly_config_set_scan_cap(sspoly_config* config, uint64_t cap);
SSPOLY_API sspoly_status sspoly_config_set_jobs(sspoly_config* config, unsigned jobs);
SSPOLY_API sspoly_status sspoly_config_set_timing(sspoly_config* config, int enabled);

/* Pipelines. On success *out owns a new bundle; on failure *out is NULL. */
SSPOLY_API sspoly_status sspoly_run_hpoly(const sspoly_config* config, sspoly_bundle** out);
SSPOLY_API sspoly_status sspoly_run_keylemma(unsigned dmax, sspoly_bundle** out);
SSPOLY_API sspoly_status sspoly_run_tower(const sspoly_config* config, sspoly_bundle** out);
SSPOLY_API sspoly_status sspoly_run_sweep(const uint64_t* qs, size_t nq, const unsigned* ds, size_t nd,
                                          const sspoly_config* config, sspoly_bundle** out);

/* 1 when every enabled check passed. */
SSPOLY_API int sspoly_bundle_passed(const sspoly_bundle* bundle);
/* Strings owned by the bundle, valid until sspoly_bundle_destroy. */
SSPOLY_API const char* sspoly_bundle_json(const sspoly_bundle* bundle);
SSPOLY_API const char* sspoly_bundle_csv(const sspoly_bundle* bundle);
SSPOLY_API void sspoly_bundle_destroy(sspoly_bundle* bundle);

/* A field tower for p(T) over F_q, for callers that want raw data. */
SSPOLY_API sspoly_status sspoly_tower_create(uint64_t q, const char* p_text, sspoly_tower** out);
SSPOLY_API void sspoly_tower_destroy(sspoly_tower* tower);
SSPOLY_API unsigned sspoly_tower_degree(const sspoly_tower* tower);
/* Degree (q^d-1)/(q-1) of the supersingular polynomial, if it fits. */
SSPOLY_API sspoly_status sspoly_tower_ss_degree(const sspoly_tower* tower, uint64_t* out);
/* JSON list of the coefficients of H(lambda); owned by the tower. */
SSPOLY_API sspoly_status sspoly_tower_hpoly_json(sspoly_tower* tower, const char** out);

#ifdef __cplusplus
}
#endif

#endif /* SSPOLY_SSPOLY_H */
