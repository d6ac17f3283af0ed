/* Exercises the shared library through the C header only. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "iwb/iwb.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void series(void) {
  iwb_series *ff = NULL, *qp = NULL, *h = NULL;
  char* s = NULL;
  int eq = 0;
  EXPECT(iwb_series_character("feigin-fuchs", 3, 4, 30, &ff) == IWB_OK);
  EXPECT(iwb_series_character("quasiparticle", 0, 0, 30, &qp) == IWB_OK);
  EXPECT(iwb_series_equal(ff, qp, &eq, &s) == IWB_OK);
  EXPECT(eq == 1);
  EXPECT(s && strcmp(s, "equal mod q^30") == 0);
  iwb_string_free(s);
  EXPECT(iwb_series_coeff(ff, 12, 1, &s) == IWB_OK);
  EXPECT(strcmp(s, "11") == 0);
  iwb_string_free(s);
  EXPECT(iwb_hilbert_series("a", 12, &h) == IWB_OK);
  EXPECT(iwb_series_equal(h, ff, &eq, &s) == IWB_OK);
  EXPECT(eq == 0);
  EXPECT(strncmp(s, "mismatch at q^9", 15) == 0);
  iwb_string_free(s);
  iwb_series_free(h);
  iwb_series_free(ff);
  iwb_series_free(qp);

  EXPECT(iwb_series_character("feigin-fuchs", 3, 6, 10, &ff) == IWB_INVALID_ARGUMENT);
  EXPECT(strlen(iwb_last_error()) > 0);
  EXPECT(iwb_series_character("nonsense", 0, 0, 10, &ff) == IWB_INVALID_ARGUMENT);
}

static void algebra(void) {
  long n = 0, dims[16];
  char* s = NULL;
  EXPECT(iwb_count_avoiding(9, &n) == IWB_OK && n == 5);
  EXPECT(iwb_count_avoiding(-1, &n) == IWB_INVALID_ARGUMENT);
  EXPECT(iwb_quotient_dims(3, 4, 15, dims) == IWB_OK);
  EXPECT(dims[6] == 3 && dims[15] == 18);
  EXPECT(iwb_singular_vector_json(3, 4, &s) == IWB_OK);
  EXPECT(strstr(s, "\"93/64\"") != NULL);
  EXPECT(strstr(s, "\"c\":\"1/2\"") != NULL);
  iwb_string_free(s);
}

static void nahm(void) {
  const double A[4] = {8, 3, 3, 2};
  const double bad[4] = {1, 2, 2, 1};
  double Q[2], alpha, g;
  const double pi = 3.14159265358979323846;
  EXPECT(iwb_nahm_alpha(A, 2, Q, &alpha, &g) == IWB_OK);
  EXPECT(fabs(Q[0] - 0.8832035059) < 1e-10);
  EXPECT(fabs(Q[1] - 0.6807398542) < 1e-10);
  EXPECT(fabs(alpha - pi * pi / 12) < 1e-12);
  EXPECT(fabs(g - 0.5) < 1e-12);
  EXPECT(iwb_nahm_alpha(bad, 2, Q, &alpha, &g) == IWB_NOT_POSITIVE_DEFINITE);
}

static void runs(void) {
  iwb_config* cfg = NULL;
  iwb_report* rep = NULL;
  const char* v = NULL;
  EXPECT(iwb_config_new(&cfg) == IWB_OK);
  EXPECT(iwb_config_set(cfg, "bogus", "1") == IWB_INVALID_ARGUMENT);
  EXPECT(iwb_config_set(cfg, "qseries_n", "0") == IWB_INVALID_ARGUMENT);
  EXPECT(iwb_config_set(cfg, "format", "xml") == IWB_INVALID_ARGUMENT);
  EXPECT(iwb_config_set(cfg, "format", "json") == IWB_OK);
  EXPECT(iwb_config_get(cfg, "format", &v) == IWB_OK && strcmp(v, "json") == 0);
  EXPECT(iwb_config_set(cfg, "jobs", "4") == IWB_OK);
  EXPECT(iwb_config_halve(cfg) == IWB_OK);
  EXPECT(iwb_check_count() == 14);
  EXPECT(iwb_check_name(14) == NULL);
  EXPECT(iwb_run(cfg, "nope", &rep) == IWB_INVALID_ARGUMENT);
  EXPECT(iwb_run(cfg, "all", &rep) == IWB_OK);
  EXPECT(iwb_report_count(rep) == 15);
  EXPECT(iwb_report_passed(rep) == 1);
  EXPECT(strstr(iwb_report_json(rep), "\"schema\":1") != NULL);
  iwb_report_free(rep);

  EXPECT(iwb_config_set(cfg, "gens", "a") == IWB_OK);
  EXPECT(iwb_run(cfg, "hilbert", &rep) == IWB_OK);
  EXPECT(iwb_report_passed(rep) == 0);
  EXPECT(strstr(iwb_report_json(rep), "mismatch at q^9") != NULL);
  iwb_report_free(rep);
  iwb_config_free(cfg);
}

int main(void) {
  EXPECT(strcmp(iwb_status_string(IWB_NO_CONVERGENCE), "NoConvergence") == 0);
  series();
  algebra();
  nahm();
  runs();
  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("capi_test: all passed\n");
  return failures ? 1 : 0;
}
