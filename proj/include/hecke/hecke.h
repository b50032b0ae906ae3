#ifndef HECKE_H
#define HECKE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HECKE_BUILDING_LIBRARY)
#define HK_API __attribute__((visibility("default")))
#else
#define HK_API
#endif

typedef enum hk_status {
  HK_OK = 0,
  HK_INVALID_ARGUMENT = 1,
  HK_PARSE_ERROR = 2,
  HK_REDUCIBLE_LAYER = 3,
  HK_DEGREE_OVER_LIMIT = 4,
  HK_PRECISION_EXHAUSTED = 5,
  HK_CLOSURE_TOO_LARGE = 6,
  HK_NOT_A_BASIS = 7,
  HK_NOT_TOTALLY_NEGATIVE = 8,
  HK_SQRT_NOT_IN_CLOSURE = 9,
  HK_NOT_PURE = 10,
  HK_FIBER_MISMATCH = 11,
  HK_WINDOW_VIOLATED = 12,
  HK_NOT_A_CM_TYPE_AFTER_ACTION = 13,
  HK_UNIT_INCOMPATIBLE = 14,
  HK_EVEN_PRIME_UNSUPPORTED = 15,
  HK_POLE_AT_S = 16,
  HK_OUTSIDE_CONVERGENCE = 17,
  HK_TAIL_TOO_LARGE = 18,
  HK_DENOMINATOR_INDISTINGUISHABLE_FROM_ZERO = 19,
  HK_COEFFICIENT_OVERFLOW = 20,
  HK_NOT_SUPPORTED = 21,
  HK_INTERNAL = 99
} hk_status;

/* Number field with its Galois closure (computed on first use). */
typedef struct hk_field hk_field;
/* Algebraic Hecke character over a catalog imaginary quadratic field. */
typedef struct hk_character hk_character;

typedef struct hk_eval_options {
  unsigned bits;    /* working precision, default 192 */
  unsigned workers; /* summation threads, default 1 */
  double tail;      /* required truncation bound, default 1e-10 */
  long norm_bound;  /* 0 chooses X from tail */
  int conjugate;    /* evaluate at the conjugate embedding */
} hk_eval_options;

HK_API void hk_eval_options_default(hk_eval_options* opt);

HK_API const char* hk_version(void);
HK_API const char* hk_status_name(hk_status s);
/* Message of the last failure on the calling thread ("" if none). */
HK_API const char* hk_last_error(void);
/* Frees strings returned through char** out-parameters. */
HK_API void hk_string_free(char* s);

/* {"layers": [{"var": "i", "minpoly": "x^2+1"}, ...]} */
HK_API hk_status hk_field_from_json(const char* json, hk_field** out);
HK_API hk_status hk_field_from_catalog(const char* name, hk_field** out);
HK_API void hk_field_free(hk_field* f);
HK_API int hk_field_degree(const hk_field* f);

/* Reports are JSON documents. Infinity types are comma-separated exponent lists. */
HK_API hk_status hk_field_info(hk_field* f, char** json_out);
HK_API hk_status hk_field_discriminant(hk_field* f, char** json_out);
HK_API hk_status hk_purity(hk_field* f, const char* type_csv, char** json_out);
HK_API hk_status hk_critical_set(hk_field* f, const char* analytic_csv, const char* eps_csv, char** json_out);
HK_API hk_status hk_signatures(hk_field* f, const char* type_csv, char** json_out);

/* {"field": "Q(i)", "k": 8, "twist_modulus": null, "twist_table": null, "quad_d": "4+i", "tate": 0} */
HK_API hk_status hk_character_from_json(const char* json, hk_character** out);
HK_API void hk_character_free(hk_character* c);
HK_API hk_status hk_lvalue(const hk_character* c, const char* s, const hk_eval_options* opt, char** json_out);
HK_API hk_status hk_ratio(const hk_character* c, long m, const hk_eval_options* opt, char** json_out);

/* params: {"field", "k", "d", "m", "qbound", "tolerance", "fallback"}; all optional. */
HK_API hk_status hk_counterexample(const char* params_json, const hk_eval_options* opt, char** json_out);

#ifdef __cplusplus
}
#endif

#endif
