/* C interface to the rank-variety verification engine.
 *
 * All functions that produce text allocate the result with malloc and
 * hand ownership to the caller; release it with rv_string_free.  On any
 * status other than RV_OK, rv_last_error returns a message describing
 * the failure (owned by the engine, valid until the next call).
 */
#ifndef RANKVAR_H
#define RANKVAR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rv_engine rv_engine;

typedef enum {
  RV_OK = 0,    /* success / suite passed */
  RV_FAIL = 1,  /* computation ran but the verification failed */
  RV_USAGE = 2, /* unknown suite, module or format */
  RV_PARAM = 3, /* parameter outside the supported range */
  RV_IO = 4     /* input/output failure */
} rv_status;

rv_engine* rv_engine_new(void);
void rv_engine_free(rv_engine* eng);

const char* rv_last_error(const rv_engine* eng);

/* All randomness in subsequent calls flows from this one seed. */
void rv_set_seed(rv_engine* eng, uint64_t seed);

/* Lift the default parameter guardrails (p <= 7, k in [2,4], e <= 3). */
void rv_set_relaxed_limits(rv_engine* eng, int relax);

/* Module selectors for rv_scan / rv_generic_type / rv_module_info:
 *   "natural"     the dim kp-1 standard module
 *   "specht"      the dim kp standard module
 *   "specht-hook" its r-th exterior power (dim C(kp, r))
 *   "D1"          the dim kp-2 simple quotient
 *   "Dr"          its r-th exterior power
 *   "D(p-1)"      shorthand for Dr at r = p-1
 * r is ignored by selectors that do not use it. */

/* Runs a verification suite ("lemma3.5", "thm3.6", "thm4.2", "main",
 * "lemma4.6", "lemma2.4", "lemma2.6"); *json_out receives the result
 * record.  RV_OK if the suite passed, RV_FAIL if it ran and failed. */
rv_status rv_run_suite(rv_engine* eng, const char* name, int p, int k, int e,
                       char** json_out);

/* Point-by-point scan of a module; format is "json" or "csv".
 * exhaustive > 0 forces full enumeration regardless of the budget,
 * exhaustive = 0 leaves the default cutoff, samples is the sample count
 * for the non-exhaustive path. */
rv_status rv_scan(rv_engine* eng, const char* module, int p, int k, int e, int r,
                  int exhaustive, int samples, const char* format, char** out);

/* Generic Jordan type with witness point and unanimity flag. */
rv_status rv_generic_type(rv_engine* eng, const char* module, int p, int k, int e,
                          int r, int trials, char** json_out);

/* stages_json is a JSON array of partitions (arrays of parts).  The
 * result records whether the chain is a valid LR sequence and, if so,
 * its type, companion tableau and lattice word. */
rv_status rv_lr_verify(rv_engine* eng, const char* stages_json, char** json_out);

/* Brute-force vs. closed-form LR source sets for the two mu families:
 * case 1 is mu = (p^b, 1) with beta = p - beta' over all beta' of
 * weight m other than the single row; case 2 is mu = (p^b, p-1) with
 * beta over the same partitions directly.  b runs over [b_lo, b_hi].
 * RV_OK when every pair agrees, RV_FAIL otherwise. */
rv_status rv_lr_sources(rv_engine* eng, int p, int m, int b_lo, int b_hi,
                        int which_case, char** json_out);

/* Jordan type of the r-th exterior power of J_n from the q-binomial
 * recurrence, cross-checked against the matrix route. */
rv_status rv_repring_ext(rv_engine* eng, int n, int r, int p, char** json_out);

/* Dimension and generator checks (order p, commutation) of a module. */
rv_status rv_module_info(rv_engine* eng, const char* module, int p, int k, int e,
                         int r, char** json_out);

/* The statement-to-suite traceability table as Markdown. */
rv_status rv_traceability(rv_engine* eng, char** out);

void rv_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RANKVAR_H */
