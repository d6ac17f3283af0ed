#ifndef IWB_IWB_H
#define IWB_IWB_H

#include <stddef.h>

#if defined(_WIN32)
#define IWB_API __declspec(dllexport)
#else
#define IWB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iwb_status {
  IWB_OK = 0,
  IWB_INVALID_ARGUMENT = 1,
  IWB_PARSE_ERROR = 2,
  IWB_ZERO_CONSTANT_TERM = 3,
  IWB_NOT_POSITIVE_DEFINITE = 4,
  IWB_NOT_IN_P = 5,
  IWB_ZERO_POLYNOMIAL = 6,
  IWB_NO_SOLUTION = 7,
  IWB_NON_UNIQUE_SOLUTION = 8,
  IWB_NO_CONVERGENCE = 9,
  IWB_DOMAIN_ERROR = 10,
  IWB_STABILIZATION_NOT_REACHED = 11,
  IWB_LEADING_MONOMIAL_MISMATCH = 12,
  IWB_OVERFLOW = 13,
  IWB_INTERNAL = 14
} iwb_status;

typedef struct iwb_config iwb_config;
typedef struct iwb_report iwb_report;
typedef struct iwb_series iwb_series;

IWB_API const char* iwb_version(void);
IWB_API const char* iwb_status_string(iwb_status s);
/* Message of the last failed call on this thread ("" if none). */
IWB_API const char* iwb_last_error(void);
/* Frees strings returned through char** out-parameters. */
IWB_API void iwb_string_free(char* s);

/* Run configuration. Keys: qseries_n, two_variable_n, hilbert_n, groebner_n,
   virasoro_n, e8_n, modules_n, partitions_n, families_n, recurrence_n,
   prop51_k, slice_limit, gap_n, gens, trunc, format, jobs, out. */
IWB_API iwb_status iwb_config_new(iwb_config** out);
IWB_API void iwb_config_free(iwb_config* cfg);
IWB_API iwb_status iwb_config_set(iwb_config* cfg, const char* key, const char* value);
IWB_API iwb_status iwb_config_load(iwb_config* cfg, const char* path);
/* Halve every order. */
IWB_API iwb_status iwb_config_halve(iwb_config* cfg);
/* Current value of format, out or jobs; the string is owned by cfg. */
IWB_API iwb_status iwb_config_get(const iwb_config* cfg, const char* key, const char** value);

IWB_API size_t iwb_check_count(void);
/* NULL when i is out of range. */
IWB_API const char* iwb_check_name(size_t i);

/* check is one of the names above or "all". A failed check is not an error:
   the call returns IWB_OK and iwb_report_passed gives 0. */
IWB_API iwb_status iwb_run(const iwb_config* cfg, const char* check, iwb_report** out);
IWB_API void iwb_report_free(iwb_report* r);
IWB_API int iwb_report_passed(const iwb_report* r);
IWB_API size_t iwb_report_count(const iwb_report* r);
/* {"schema": 1, "passed": ..., "reports": [...]}; owned by r. */
IWB_API const char* iwb_report_json(const iwb_report* r);

/* which: "feigin-fuchs" (uses p, pp), "bgg", "fermion-half", "euler",
   "quintuple", "quasiparticle", "e8-nahm", "andrews-gordon" (uses p as s). */
IWB_API iwb_status iwb_series_character(const char* which, long p, long pp, long trunc, iwb_series** out);
IWB_API void iwb_series_free(iwb_series* s);
/* Coefficient of q^(num/den) as "a/b". */
IWB_API iwb_status iwb_series_coeff(const iwb_series* s, long num, long den, char** out);
IWB_API iwb_status iwb_series_json(const iwb_series* s, char** out);
/* *equal is 1 when a = b up to the common truncation order. */
IWB_API iwb_status iwb_series_equal(const iwb_series* a, const iwb_series* b, int* equal, char** description);

/* Number of partitions of n avoiding every forbidden pattern. */
IWB_API iwb_status iwb_count_avoiding(long n, long* out);
/* Graded dimensions of Vir(p, pp) in degrees 0..n, written to dims[0..n]. */
IWB_API iwb_status iwb_quotient_dims(long p, long pp, long n, long* dims);
/* The normalized singular vector as JSON. */
IWB_API iwb_status iwb_singular_vector_json(long p, long pp, char** out);
/* Hilbert series of C[L_{-2}, ...]/(gens)_d mod q^(n+1); gens is "a", "b" or "a,b". */
IWB_API iwb_status iwb_hilbert_series(const char* gens, long n, iwb_series** out);

/* A is n x n, row major. Q receives n values. */
IWB_API iwb_status iwb_nahm_alpha(const double* A, size_t n, double* Q, double* alpha, double* g);

#ifdef __cplusplus
}
#endif

#endif
