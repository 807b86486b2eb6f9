/*
 * Copyright 2026 The tailsum Authors
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

/*
 * C interface of the tailsum library.
 *
 * All handles are opaque; every function that can fail returns a
 * ts_status and writes its result through an out parameter. Strings
 * returned through char** are heap-allocated and must be released with
 * ts_string_free. Strings returned as const char* are owned by the
 * handle (or are static) and stay valid until the handle is freed.
 * On failure ts_last_error() carries a thread-local diagnostic.
 */

#ifndef TAILSUM_H
#define TAILSUM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ts_status {
  TS_OK = 0,
  TS_EINVAL = 1,    /* malformed or out-of-contract arguments */
  TS_EDIVERGENT = 2, /* the requested sum or tail integral diverges */
  TS_EDOMAIN = 3,   /* operand outside the term function's domain */
  TS_EINTERNAL = 4  /* internal inconsistency */
} ts_status;

const char* ts_status_name(ts_status status);
const char* ts_last_error(void);

void ts_string_free(char* s);

/* ------------------------------------------------------------------ *
 * Coefficient tables                                                  *
 * ------------------------------------------------------------------ */

typedef struct ts_table ts_table;

/* kind: "bernoulli-like" | "tangent-like" | "em-weights" | "boole-weights" */
ts_status ts_table_create(const char* kind, size_t count, ts_table** out);
size_t ts_table_count(const ts_table* table);
/* Entry as exact integer strings; denominator is always positive. */
ts_status ts_table_entry(const ts_table* table, size_t index,
                         char** numerator, char** denominator);
void ts_table_free(ts_table* table);

/* ------------------------------------------------------------------ *
 * Summation runs                                                      *
 * ------------------------------------------------------------------ */

typedef struct ts_report ts_report;

/* split <= 0 and max_order <= 0 select the defaults (10 and 40). */
ts_status ts_zeta(long n, long split, long max_order, ts_report** out);
ts_status ts_eta(long n, long split, long max_order, ts_report** out);
ts_status ts_zeta_via_pi(long n, ts_report** out);

/*
 * Generic inverse-power run. exponent accepts "3", "5/2" or "2.5";
 * integer exponents run exactly, anything else in high-precision floats
 * at precision_digits significant digits (<= 0 selects 60). fixed_order
 * nonzero pins the truncation order instead of the smallest-term rule.
 */
ts_status ts_sum(const char* exponent, int alternating, long start, long split,
                 long max_order, int fixed_order, long precision_digits,
                 ts_report** out);

ts_status ts_report_value(const ts_report* report, long digits, char** decimal);
int ts_report_is_exact(const ts_report* report);
/* TS_EINVAL when the run was not exact. */
ts_status ts_report_exact(const ts_report* report, char** numerator, char** denominator);
long ts_report_k_star(const ts_report* report);
size_t ts_report_term_count(const ts_report* report);
ts_status ts_report_term(const ts_report* report, size_t index, long digits,
                         char** decimal);
ts_status ts_report_error_estimate(const ts_report* report, long digits,
                                   char** decimal);
long ts_report_split(const ts_report* report);
const char* ts_report_mode(const ts_report* report); /* "exact" | "approx" */
int ts_report_diverged(const ts_report* report);
void ts_report_free(ts_report* report);

/* ------------------------------------------------------------------ *
 * Verification                                                        *
 * ------------------------------------------------------------------ */

typedef struct ts_verify_report ts_verify_report;

/*
 * Runs the full consistency battery at the given order (<= 0 selects 40).
 * inject_fault may be NULL/"" for a normal run, or "bernoulli"/"tangent"
 * to corrupt one table entry first — a self-test that the checks can fail.
 */
ts_status ts_verify_run(long order, const char* inject_fault, ts_verify_report** out);
size_t ts_verify_check_count(const ts_verify_report* report);
ts_status ts_verify_check(const ts_verify_report* report, size_t index,
                          const char** name, int* passed);
const char* ts_verify_check_detail(const ts_verify_report* report, size_t index);
int ts_verify_all_passed(const ts_verify_report* report);
void ts_verify_free(ts_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TAILSUM_H */
