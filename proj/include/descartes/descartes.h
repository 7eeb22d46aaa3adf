/* C interface to the descartes library. All handles are opaque; every
 * function returning int reports a dsc_status. Strings returned through
 * char** are owned by the caller and released with dsc_string_free. */
#ifndef DESCARTES_H
#define DESCARTES_H

#include <stddef.h>
#include <stdint.h>

#if defined(DSC_BUILDING_LIBRARY)
#define DSC_API __attribute__((visibility("default")))
#else
#define DSC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsc_status {
  DSC_OK = 0,
  DSC_PARSE_ERROR,
  DSC_ZERO_COEFFICIENT,
  DSC_ZERO_POLYNOMIAL,
  DSC_DEGREE_LIMIT_EXCEEDED,
  DSC_ZERO_CONSTANT_TERM,
  DSC_EPSILON_EXHAUSTED,
  DSC_INADMISSIBLE_PAIR,
  DSC_BAD_PATTERN,
  DSC_EXPRESSION_TOO_LARGE,
  DSC_NOT_CERTIFIABLE,
  DSC_MANIFEST_PARSE,
  DSC_UNKNOWN_CLAIM_KIND,
  DSC_CONFIG_ERROR,
  DSC_INVALID_ARGUMENT,
  DSC_INTERNAL_ERROR
} dsc_status;

typedef struct dsc_poly dsc_poly;
typedef struct dsc_config dsc_config;
typedef struct dsc_report dsc_report;

typedef struct dsc_root_summary {
  int pos_distinct;
  int neg_distinct;
  int pos_with_mult;
  int neg_with_mult;
  int zero_mult;
  int complex_pairs;
} dsc_root_summary;

DSC_API const char* dsc_version(void);
DSC_API const char* dsc_status_name(int status);
/* Message of the last failure on the calling thread ("" if none). */
DSC_API const char* dsc_last_error(void);
DSC_API void dsc_string_free(char* s);

/* Polynomials: comma-separated rationals, constant term first ("1,0,-2,1"). */
DSC_API int dsc_poly_parse(const char* text, dsc_poly** out);
/* coeffs[i] is the coefficient of x^i, each a rational string "p/q". */
DSC_API int dsc_poly_from_coeffs(const char* const* coeffs, size_t count, dsc_poly** out);
DSC_API void dsc_poly_free(dsc_poly* p);
DSC_API int dsc_poly_degree(const dsc_poly* p, int* degree);
DSC_API int dsc_poly_to_string(const dsc_poly* p, char** out);
DSC_API int dsc_poly_sign_pattern(const dsc_poly* p, char** out);
DSC_API int dsc_poly_root_summary(const dsc_poly* p, dsc_root_summary* out);
/* Distinct real roots in (lo, hi), both rational strings; an endpoint root counts. */
DSC_API int dsc_poly_count_roots_in(const dsc_poly* p, const char* lo, const char* hi, int* count);

/* Sign patterns are strings over {+,-} with leading '+'. */
DSC_API int dsc_descartes_pair(const char* pattern, int* changes, int* preservations);
/* JSON array of {"pos":..,"neg":..}. */
DSC_API int dsc_admissible_pairs(const char* pattern, char** json_out);
/* kappa for the two-change pattern with m pluses, n minuses, q pluses, as "p/q". */
DSC_API int dsc_kappa(int m, int n, int q, char** out);
/* Checks that poly realizes (pattern, (pos, neg)); *ok is 1 or 0. */
DSC_API int dsc_certify(const dsc_poly* p, const char* pattern, int pos, int neg, int* ok);

/* Configuration: defaults, optionally loaded from a TOML-style file. */
DSC_API int dsc_config_new(dsc_config** out);
DSC_API int dsc_config_load(const char* path, dsc_config** out);
DSC_API int dsc_config_set(dsc_config* cfg, const char* key, const char* value);
DSC_API void dsc_config_free(dsc_config* cfg);

/* Commands. On success *out holds a report even when the command's own
 * outcome is a refutation or an inadmissible input; inspect its exit code. */
DSC_API int dsc_cmd_classify(const dsc_config* cfg, int degree, dsc_report** out);
DSC_API int dsc_cmd_orbit(const dsc_config* cfg, const char* pattern, int pos, int neg, dsc_report** out);
/* only: comma-separated claim ids, or NULL for all. */
DSC_API int dsc_cmd_verify(const dsc_config* cfg, const char* manifest, const char* only, dsc_report** out);
DSC_API int dsc_cmd_search(const dsc_config* cfg, const char* pattern, int pos, int neg, dsc_report** out);

DSC_API const char* dsc_report_text(const dsc_report* r);
/* with_metadata = 0 omits timestamps and timings (stable across runs). */
DSC_API int dsc_report_json(const dsc_report* r, int with_metadata, char** out);
DSC_API int dsc_report_exit_code(const dsc_report* r);
DSC_API void dsc_report_free(dsc_report* r);

#ifdef __cplusplus
}
#endif

#endif /* DESCARTES_H */
