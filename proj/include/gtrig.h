/*
 * gtrig.h - C interface to the generalized trigonometric function library.
 *
 * Every function returns a gtrig_status. On failure a description of the
 * most recent error on the calling thread is available from
 * gtrig_last_error(). Handles are opaque; each *_create / producing call is
 * paired with a *_destroy or gtrig_string_free.
 */
#ifndef GTRIG_H
#define GTRIG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef GTRIG_BUILDING_LIBRARY
#    define GTRIG_API __declspec(dllexport)
#  else
#    define GTRIG_API __declspec(dllimport)
#  endif
#else
#  define GTRIG_API __attribute__((visibility("default")))
#endif

typedef enum gtrig_status {
  GTRIG_OK = 0,
  GTRIG_E_DOMAIN = 1,        /* argument outside the domain */
  GTRIG_E_CONVERGENCE = 2,   /* iteration budget exhausted */
  GTRIG_E_REGIME = 3,        /* parameters outside a theorem's hypothesis */
  GTRIG_E_SINGULAR = 4,      /* second derivative at a singular point */
  GTRIG_E_IO = 5,            /* file could not be written */
  GTRIG_E_NOT_FOUND = 6,     /* search completed without a result */
  GTRIG_E_INVALID = 7,       /* null pointer, bad enum or index */
  GTRIG_E_INTERNAL = 8
} gtrig_status;

typedef struct gtrig_accuracy {
  double abs_tol;
  double rel_tol;
  int max_iter;
} gtrig_accuracy;

typedef enum gtrig_fn {
  GTRIG_FN_SIN = 0,
  GTRIG_FN_COS = 1,
  GTRIG_FN_SIN_DD = 2,
  GTRIG_FN_SERIES3 = 3,
  GTRIG_FN_ARCSIN = 4
} gtrig_fn;

typedef enum gtrig_suite {
  GTRIG_SUITE_REDHEFFER = 0,
  GTRIG_SUITE_UPPER = 1,
  GTRIG_SUITE_COS = 2,
  GTRIG_SUITE_CONDITIONS = 3,
  GTRIG_SUITE_MULTIPLE_ANGLE = 4,
  GTRIG_SUITE_ODE = 5,
  GTRIG_SUITE_SERIES = 6
} gtrig_suite;

typedef enum gtrig_bound {
  GTRIG_BOUND_EQ_GRI = 0,
  GTRIG_BOUND_Q_POWER = 1,
  GTRIG_BOUND_UPPER_P2 = 2
} gtrig_bound;

/* margin = rhs - lhs; a violation has margin <= 0. */
typedef struct gtrig_counterexample {
  double x;
  double lhs;
  double rhs;
  double margin;
  int has_crossing;  /* nonzero when `crossing` is set */
  double crossing;   /* first abscissa where the margin turns non-positive */
} gtrig_counterexample;

typedef struct gtrig_ctx gtrig_ctx;
typedef struct gtrig_report gtrig_report;

GTRIG_API const char* gtrig_version(void);
GTRIG_API const char* gtrig_last_error(void);
GTRIG_API const char* gtrig_status_string(gtrig_status status);
GTRIG_API gtrig_accuracy gtrig_default_accuracy(void);

/* Context bound to one exponent pair (p, q), 1 < p, q. acc may be NULL. */
GTRIG_API gtrig_status gtrig_ctx_create(double p, double q, const gtrig_accuracy* acc, gtrig_ctx** out);
GTRIG_API void gtrig_ctx_destroy(gtrig_ctx* ctx);

GTRIG_API gtrig_status gtrig_pi(const gtrig_ctx* ctx, double* out);
GTRIG_API gtrig_status gtrig_eval(const gtrig_ctx* ctx, gtrig_fn fn, double x, double* out);

/* Scan CSV. gtrig_scan_csv hands back a NUL-terminated buffer released with
 * gtrig_string_free; gtrig_scan_write writes it to `path`. */
GTRIG_API gtrig_status gtrig_scan_csv(const gtrig_ctx* ctx, double from, double to, int n, char** out);
GTRIG_API gtrig_status gtrig_scan_write(const gtrig_ctx* ctx, double from, double to, int n, const char* path);
GTRIG_API void gtrig_string_free(char* s);

GTRIG_API gtrig_status gtrig_suite_from_name(const char* name, gtrig_suite* out);
GTRIG_API gtrig_status gtrig_verify(const gtrig_ctx* ctx, gtrig_suite suite, int n, gtrig_report** out);
GTRIG_API gtrig_status gtrig_explore(const gtrig_ctx* ctx, gtrig_bound bound, double from, double to, int n,
                                     gtrig_report** out);

GTRIG_API int gtrig_report_passed(const gtrig_report* report);
GTRIG_API double gtrig_report_metric(const gtrig_report* report);
GTRIG_API const char* gtrig_report_metric_name(const gtrig_report* report);
GTRIG_API const char* gtrig_report_text(const gtrig_report* report);
GTRIG_API int gtrig_report_violation_count(const gtrig_report* report);
GTRIG_API gtrig_status gtrig_report_violation(const gtrig_report* report, int index, gtrig_counterexample* out);
GTRIG_API void gtrig_report_destroy(gtrig_report* report);

/* Deepest violation of the q-power bound on (pi/2, pi). GTRIG_E_NOT_FOUND
 * when the scan finds none. */
GTRIG_API gtrig_status gtrig_find_qpower_counterexample(const gtrig_ctx* ctx, gtrig_counterexample* out);

#ifdef __cplusplus
}
#endif

#endif /* GTRIG_H */
