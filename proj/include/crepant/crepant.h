/*
   Copyright 2026 The crepant authors

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

#ifndef CREPANT_CREPANT_H
#define CREPANT_CREPANT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CREPANT_BUILDING_LIBRARY)
#define CREPANT_API __attribute__((visibility("default")))
#else
#define CREPANT_API
#endif

typedef struct crepant_session crepant_session;

typedef enum crepant_status {
  CREPANT_OK = 0,
  CREPANT_E_INVALID_ARGUMENT = 1,
  CREPANT_E_DIVISION_BY_ZERO = 2,
  CREPANT_E_NON_INVERTIBLE = 3,
  CREPANT_E_WRONG_GEOMETRY = 4,
  CREPANT_E_NON_UNIT_LEADING_TERM = 5,
  CREPANT_E_INSUFFICIENT_ORDER = 6,
  CREPANT_E_INCONSISTENT_SYSTEM = 7,
  CREPANT_E_CONSISTENCY_FAILURE = 8,
  CREPANT_E_INTERNAL = 9,
  CREPANT_E_OUT_OF_MEMORY = 10
} crepant_status;

typedef enum crepant_format { CREPANT_FORMAT_TEXT = 0, CREPANT_FORMAT_JSON = 1 } crepant_format;

typedef struct crepant_run_options {
  int order;       /* x-order of the relation checks */
  int z_order;     /* R-matrix z-order */
  int crc_order;   /* psi-order of the constancy check */
  int exploratory; /* extra z-orders, reported only */
  int jobs;        /* worker threads */
  int timings;     /* nonzero adds wall times to the output */
  const char* fault; /* NULL, "bernoulli" or "root" */
} crepant_run_options;

CREPANT_API const char* crepant_version(void);
CREPANT_API const char* crepant_status_string(crepant_status status);

CREPANT_API crepant_status crepant_session_create(crepant_session** out);
CREPANT_API void crepant_session_destroy(crepant_session* session);
/* Message of the last failing call on this session; never NULL. */
CREPANT_API const char* crepant_last_error(const crepant_session* session);

/* Strings returned through `char** out` are owned by the caller. */
CREPANT_API void crepant_string_free(char* s);

/* N_k as "p/q". */
CREPANT_API crepant_status crepant_n_constant(crepant_session* s, int k, char** out);
/* B_m(x) for x given as "p/q". */
CREPANT_API crepant_status crepant_bernoulli_poly(crepant_session* s, int m, const char* x, char** out);

/* Hypergeometric series of a geometry ("kp4" or "c5z5"). `emit` selects one of
   c0..c4, l, x, y, mirror, b1..b4; NULL emits all. */
CREPANT_API crepant_status crepant_series(crepant_session* s, const char* geometry, int order, const char* emit,
                                          crepant_format fmt, char** out);

/* R-matrix through z^z_order; `order` is the psi-order for c5z5 and ignored for kp4. */
CREPANT_API crepant_status crepant_rmatrix(crepant_session* s, const char* geometry, int z_order, int order,
                                           int with_prefactor, crepant_format fmt, char** out);

/* `check` is "associativity", "correlators", "idempotents" or NULL for all.
   *passed is set to 1 when no check fails. */
CREPANT_API crepant_status crepant_frobenius(crepant_session* s, int order, const char* check, crepant_format fmt,
                                             int timings, char** out, int* passed);

/* `check` is "prop1", "crc" or NULL for both. */
CREPANT_API crepant_status crepant_verify(crepant_session* s, int z_order, int order, int exploratory,
                                          const char* check, crepant_format fmt, int timings, char** out,
                                          int* passed);

CREPANT_API void crepant_run_options_init(crepant_run_options* opts);
CREPANT_API crepant_status crepant_run_all(crepant_session* s, const crepant_run_options* opts, crepant_format fmt,
                                           char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
