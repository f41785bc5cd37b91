#ifndef EXTREMAL_H
#define EXTREMAL_H

/*
 * C interface to the extremal-constants verification library.
 *
 * Every runner produces an opaque report handle carrying a canonical JSON
 * certificate, a status string, and the process exit code mandated by the
 * CLI contract (0 = certified / diagnostic, 2 = claim failed or search
 * incomplete). Runners return EXC_ERROR (1) on invalid arguments or runtime
 * failure, in which case *out is NULL and exc_last_error() describes the
 * problem. Handles must be released with exc_report_free().
 *
 * Rational arguments are strings: "p/q", integers, or decimal literals.
 */

#include <stdint.h>

#if defined(_WIN32)
#define EXC_API __declspec(dllexport)
#else
#define EXC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum exc_status {
  EXC_OK = 0,     /* report produced; claim certified or diagnostic */
  EXC_ERROR = 1,  /* invalid arguments or runtime failure; no report */
  EXC_FAILED = 2  /* report produced; claim failed / search incomplete */
} exc_status;

typedef struct exc_report exc_report;

/* Gaussian-perimeter certificate (theorem-1 pipeline). */
EXC_API exc_status exc_gauss_certify(const char* a, const char* b,
                                     const char* W, const char* h,
                                     const char* target, long long n,
                                     exc_report** out);

/* Hermite / cube moment ratios; N ignored when gaussian_only != 0. */
EXC_API exc_status exc_moment_ratio(int m, int N, int gaussian_only,
                                    int walsh_check, exc_report** out);

/* Middle-slice comparison suite. coeffs is a comma-separated rational list. */
EXC_API exc_status exc_slice_ratio(int n, const char* coeffs, exc_report** out);
EXC_API exc_status exc_slice_spectrum(int n, exc_report** out);
EXC_API exc_status exc_slice_poincare(int n, const char* coeffs, exc_report** out);
EXC_API exc_status exc_slice_search(int n, int restarts, uint64_t seed,
                                    exc_report** out);

/* Autoconvolution suite. values empty/NULL selects the constant profile. */
EXC_API exc_status exc_autoconv_sup(const char* values, int cells,
                                    exc_report** out);
EXC_API exc_status exc_autoconv_search(int cells, int m, uint64_t node_budget,
                                       exc_report** out);
EXC_API exc_status exc_autoconv_young(const char* values, int m,
                                      exc_report** out);
EXC_API exc_status exc_autoconv_chain(const char* b, int m, exc_report** out);

/* g-Sidon suite. set is a comma-separated list of positive integers. */
EXC_API exc_status exc_sidon_check(const char* set, int g, exc_report** out);
EXC_API exc_status exc_sidon_beta(int n, int g, exc_report** out);

/* Claim-to-theorem manifest. */
EXC_API exc_status exc_manifest(exc_report** out);

/* The manifest as plain text (static storage, never NULL). */
EXC_API const char* exc_manifest_text(void);

/* Report accessors. Strings are owned by the report. */
EXC_API const char* exc_report_json(const exc_report* report);
EXC_API const char* exc_report_status(const exc_report* report);
EXC_API const char* exc_report_claim_id(const exc_report* report);
EXC_API int exc_report_exit_code(const exc_report* report);
EXC_API void exc_report_free(exc_report* report);

/* Description of the most recent EXC_ERROR on this thread. */
EXC_API const char* exc_last_error(void);

EXC_API const char* exc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* EXTREMAL_H */
