#ifndef KOORNWINDER_H
#define KOORNWINDER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every `kw_*` function.
 */
typedef enum KwStatus {
  KW_STATUS_OK = 0,
  KW_STATUS_NULL_POINTER = 1,
  KW_STATUS_UTF8 = 2,
  KW_STATUS_PARSE = 3,
  KW_STATUS_INVALID_ARGUMENT = 4,
  KW_STATUS_DIVISION_BY_ZERO = 5,
  KW_STATUS_NOT_DIVISIBLE = 6,
  KW_STATUS_SINGULAR = 7,
  KW_STATUS_REDUCIBLE = 8,
  KW_STATUS_NOT_STOCHASTIC = 9,
  KW_STATUS_NONPOSITIVE = 10,
  /**
   * A verification ran but at least one check failed.
   */
  KW_STATUS_VERIFICATION_FAILED = 11,
  KW_STATUS_PANIC = 12,
} KwStatus;

/**
 * A Laurent polynomial in `z1..zN` with scalar coefficients.
 */
typedef struct KwLaurent KwLaurent;

/**
 * The outcome of a verification run.
 */
typedef struct KwReport KwReport;

/**
 * A rational function in the parameters.
 */
typedef struct KwScalar KwScalar;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next `kw_*` call on the same thread; do not free it.
 */
const char *kw_last_error(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be NULL or a string returned by a `kw_*` function, freed once.
 */
void kw_string_free(char *s);

/**
 * Parses a scalar such as `"(t-1)/(alpha*beta)"`.
 *
 * # Safety
 * `text` must be a valid C string and `out` a writable pointer.
 */
enum KwStatus kw_scalar_parse(const char *text, struct KwScalar **out);

/**
 * # Safety
 * `s` must be NULL or a handle from this library, freed once.
 */
void kw_scalar_free(struct KwScalar *s);

/**
 * # Safety
 * `s` must be a valid handle and `out` a writable pointer.
 */
enum KwStatus kw_scalar_to_string(const struct KwScalar *s, char **out);

/**
 * # Safety
 * `s` must be a valid handle and `out` a writable pointer.
 */
enum KwStatus kw_scalar_to_json(const struct KwScalar *s, char **out);

/**
 * `*out = x + y`.
 *
 * # Safety
 * `x`, `y` must be valid handles and `out` a writable pointer.
 */
enum KwStatus kw_scalar_add(const struct KwScalar *x,
                            const struct KwScalar *y,
                            struct KwScalar **out);

/**
 * `*out = x − y`.
 *
 * # Safety
 * `x`, `y` must be valid handles and `out` a writable pointer.
 */
enum KwStatus kw_scalar_sub(const struct KwScalar *x,
                            const struct KwScalar *y,
                            struct KwScalar **out);

/**
 * `*out = x · y`.
 *
 * # Safety
 * `x`, `y` must be valid handles and `out` a writable pointer.
 */
enum KwStatus kw_scalar_mul(const struct KwScalar *x,
                            const struct KwScalar *y,
                            struct KwScalar **out);

/**
 * `*out = x / y`; `KW_STATUS_DIVISION_BY_ZERO` when `y` is zero.
 *
 * # Safety
 * `x`, `y` must be valid handles and `out` a writable pointer.
 */
enum KwStatus kw_scalar_div(const struct KwScalar *x,
                            const struct KwScalar *y,
                            struct KwScalar **out);

/**
 * Writes 1 to `out` when the scalars are equal, 0 otherwise.
 *
 * # Safety
 * `x`, `y` must be valid handles and `out` a writable pointer.
 */
enum KwStatus kw_scalar_equal(const struct KwScalar *x, const struct KwScalar *y, int32_t *out);

/**
 * The generating function `R(μ)` of a word such as `"bsos"` or `"1 0 -1 0"`.
 *
 * # Safety
 * `word` must be a valid C string and `out` a writable pointer.
 */
enum KwStatus kw_gen_r(const char *word, struct KwScalar **out);

/**
 * The normalized generating function `R̃(μ)`.
 *
 * # Safety
 * `word` must be a valid C string and `out` a writable pointer.
 */
enum KwStatus kw_gen_rtilde(const char *word, struct KwScalar **out);

/**
 * The partition function `Z_{N,r}`.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum KwStatus kw_partition_z(size_t n, size_t r, struct KwScalar **out);

/**
 * The normalized partition function `Z̃_{N,r}`.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum KwStatus kw_partition_ztilde(size_t n, size_t r, struct KwScalar **out);

/**
 * Number of rhombic staircase tableaux of the given type.
 *
 * # Safety
 * `word` must be a valid C string and `out` a writable pointer.
 */
enum KwStatus kw_count_tableaux(const char *word, uint64_t *out);

/**
 * Parses a Laurent polynomial in `z1..z{nvars}`, e.g. `"z1 + 1/z1"`.
 *
 * # Safety
 * `text` must be a valid C string and `out` a writable pointer.
 */
enum KwStatus kw_laurent_parse(const char *text, size_t nvars, struct KwLaurent **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library, freed once.
 */
void kw_laurent_free(struct KwLaurent *p);

/**
 * # Safety
 * `p` must be a valid handle and `out` a writable pointer.
 */
enum KwStatus kw_laurent_to_string(const struct KwLaurent *p, char **out);

/**
 * # Safety
 * `p` must be a valid handle and `out` a writable pointer.
 */
enum KwStatus kw_laurent_to_json(const struct KwLaurent *p, char **out);

/**
 * Writes 1 to `out` when the polynomials are equal, 0 otherwise.
 *
 * # Safety
 * `x`, `y` must be valid handles and `out` a writable pointer.
 */
enum KwStatus kw_laurent_equal(const struct KwLaurent *x, const struct KwLaurent *y, int32_t *out);

/**
 * The ASEP polynomial `F_μ` in the parameters `α, β, γ, δ, q, t`.
 *
 * # Safety
 * `word` must be a valid C string and `out` a writable pointer.
 */
enum KwStatus kw_asep_poly_f(const char *word, struct KwLaurent **out);

/**
 * The symmetric Koornwinder polynomial `K_λ` for a partition word `λ`.
 *
 * # Safety
 * `lambda` must be a valid C string and `out` a writable pointer.
 */
enum KwStatus kw_koornwinder_k(const char *lambda, struct KwLaurent **out);

/**
 * `K_{(1^r, 0^{N−r})}` through its expansion in elementary symmetric
 * functions.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum KwStatus kw_koornwinder_k_via_ek(size_t n, size_t r, struct KwLaurent **out);

/**
 * Checks the qKZ relations of the family of `F_μ` over the orbit of `λ`.
 * The report is written even when a check fails, in which case the status
 * is `KW_STATUS_VERIFICATION_FAILED`.
 *
 * # Safety
 * `lambda` must be a valid C string and `out` a writable pointer.
 */
enum KwStatus kw_verify_qkz(const char *lambda, struct KwReport **out);

/**
 * Checks the Hecke relations of the Noumi operators on `trials` seeded
 * random Laurent polynomials with exponents in `[-degree_bound, degree_bound]`.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum KwStatus kw_verify_hecke(size_t n,
                              size_t trials,
                              uint32_t degree_bound,
                              uint64_t seed,
                              struct KwReport **out);

/**
 * Runs every verification suite up to `max_n`. Informational suites are
 * included in the report but do not affect the status.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum KwStatus kw_verify_all(size_t max_n, uint64_t seed, struct KwReport **out);

/**
 * # Safety
 * `r` must be NULL or a handle from this library, freed once.
 */
void kw_report_free(struct KwReport *r);

/**
 * Number of entries in the report, or 0 for NULL.
 *
 * # Safety
 * `r` must be NULL or a valid handle.
 */
size_t kw_report_len(const struct KwReport *r);

/**
 * 1 if every entry passed, 0 otherwise or for NULL.
 *
 * # Safety
 * `r` must be NULL or a valid handle.
 */
int32_t kw_report_passed(const struct KwReport *r);

/**
 * Reads entry `index`: its name, detail and whether it passed. Either
 * string output may be NULL if not wanted.
 *
 * # Safety
 * `r` must be a valid handle; `passed` must be writable; `name` and
 * `detail` must be NULL or writable.
 */
enum KwStatus kw_report_entry(const struct KwReport *r,
                              size_t index,
                              int32_t *passed,
                              char **name,
                              char **detail);

/**
 * The report as text, one `PASS`/`FAIL` line per entry.
 *
 * # Safety
 * `r` must be a valid handle and `out` a writable pointer.
 */
enum KwStatus kw_report_to_string(const struct KwReport *r, char **out);

/**
 * The report as a JSON array of `{name, passed, detail}` objects.
 *
 * # Safety
 * `r` must be a valid handle and `out` a writable pointer.
 */
enum KwStatus kw_report_to_json(const struct KwReport *r, char **out);

/**
 * Exact stationary distribution of the sector with `r` second-class
 * particles, as a JSON object from state (`"b s o"`) to probability.
 * `params` uses the CLI syntax, e.g. `"alpha=1/2,beta=1/3,t=1/4"`.
 *
 * # Safety
 * `params` must be a valid C string and `out` a writable pointer.
 */
enum KwStatus kw_asep_stationary_json(size_t n, size_t r, const char *params, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KOORNWINDER_H */
