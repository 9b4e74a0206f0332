#ifndef CFGCALC_H
#define CFGCALC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CfgStatus {
  CFG_STATUS_OK = 0,
  CFG_STATUS_NULL_ARGUMENT = 1,
  CFG_STATUS_INVALID_UTF8 = 2,
  CFG_STATUS_PARSE_ERROR = 3,
  CFG_STATUS_INVALID_INPUT = 4,
  CFG_STATUS_OUT_OF_RANGE = 5,
  CFG_STATUS_BUFFER_TOO_SMALL = 6,
  CFG_STATUS_PANIC = 7,
} CfgStatus;

typedef struct CfgGrammar CfgGrammar;

typedef struct CfgPoly CfgPoly;

typedef struct CfgSeries CfgSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or an empty
 * string. Valid until the next call into this library on the same thread.
 */
const char *cfg_last_error(void);

/**
 * Library version as a static string.
 */
const char *cfg_version(void);

/**
 * # Safety
 * `s` must be null or a pointer obtained from this library.
 */
void cfg_string_free(char *s);

/**
 * Parses a Laurent polynomial such as `x^-1*y + 3/2*x`.
 *
 * # Safety
 * `src` must be a nul-terminated string; `out` must be writable.
 */
enum CfgStatus cfg_poly_parse(const char *src, struct CfgPoly **out);

/**
 * Canonical text of a polynomial; free the result with `cfg_string_free`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum CfgStatus cfg_poly_to_string(const struct CfgPoly *p, char **out);

/**
 * Writes 1 to `out` if the polynomials are equal and 0 otherwise.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum CfgStatus cfg_poly_equal(const struct CfgPoly *a, const struct CfgPoly *b, int32_t *out);

/**
 * # Safety
 * `p` must be null or a handle from this library not yet freed.
 */
void cfg_poly_free(struct CfgPoly *p);

/**
 * Looks up a builtin grammar by name, e.g. `eulerian` or `stirling:3`.
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` must be writable.
 */
enum CfgStatus cfg_grammar_builtin(const char *name, struct CfgGrammar **out);

/**
 * Parses grammar text, one `<var> -> <polynomial>` rule per line.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum CfgStatus cfg_grammar_parse(const char *text, struct CfgGrammar **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void cfg_grammar_free(struct CfgGrammar *g);

/**
 * `D^n(word)` under the grammar.
 *
 * # Safety
 * `g` and `word` must be live handles; `out` must be writable.
 */
enum CfgStatus cfg_derive_n(const struct CfgGrammar *g,
                            const struct CfgPoly *word,
                            size_t n,
                            struct CfgPoly **out);

/**
 * Exponential generating function of `word` through `t^order`.
 *
 * # Safety
 * `g` and `word` must be live handles; `out` must be writable.
 */
enum CfgStatus cfg_egf(const struct CfgGrammar *g,
                       const struct CfgPoly *word,
                       size_t order,
                       struct CfgSeries **out);

/**
 * Truncation order of a series, or 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t cfg_series_order(const struct CfgSeries *s);

/**
 * `n! * c_n` of the series as text; free with `cfg_string_free`.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum CfgStatus cfg_series_numerator(const struct CfgSeries *s, size_t n, char **out);

/**
 * # Safety
 * `s` must be null or a handle from this library not yet freed.
 */
void cfg_series_free(struct CfgSeries *s);

/**
 * Inversion table of the permutation `perm[0..n]` into `code_out`.
 *
 * # Safety
 * `perm` must hold `n` values; `code_out` must have room for `cap`.
 */
enum CfgStatus cfg_perm_code(const uint32_t *perm, size_t n, uint32_t *code_out, size_t cap);

/**
 * Maps the permutation `perm[0..n]` to an increasing tree, written as the
 * parents of vertices `1..n` into `parents_out`.
 *
 * # Safety
 * `perm` must hold `n` values; `parents_out` must have room for `cap`.
 */
enum CfgStatus cfg_phi(const uint32_t *perm, size_t n, uint32_t *parents_out, size_t cap);

/**
 * Inverse of `cfg_phi`: `parents[0..n]` are the parents of vertices `1..n`.
 *
 * # Safety
 * `parents` must hold `n` values; `perm_out` must have room for `cap`.
 */
enum CfgStatus cfg_psi(const uint32_t *parents, size_t n, uint32_t *perm_out, size_t cap);

/**
 * Runs a verification suite (`all`, `eulerian`, `bijection`, ...).
 * Writes 1 to `passed` when every check passes, and the JSON report to
 * `report_json` when it is non-null.
 *
 * # Safety
 * `suite` must be a nul-terminated string; `passed` must be writable;
 * `report_json` must be null or writable.
 */
enum CfgStatus cfg_verify(const char *suite,
                          size_t max_n,
                          size_t order,
                          int32_t *passed,
                          char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CFGCALC_H */
