#ifndef CHEBWARING_H
#define CHEBWARING_H

/*
 * C interface to the chebwaring library.
 *
 * Every function returning int returns a cw_status code. On failure a
 * description is available from cw_last_error() on the calling thread until
 * the next failing call. Objects returned through out-parameters are owned by
 * the caller and released with the matching *_free function; strings are
 * released with cw_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define CW_API __declspec(dllexport)
#else
#  define CW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cw_status {
  CW_OK = 0,
  CW_ERR_INVALID_ARGUMENT = 1,
  CW_ERR_DOMAIN = 2,
  CW_ERR_POLE = 3,
  CW_ERR_INTEGRALITY = 4,
  CW_ERR_PARSE = 5,
  CW_ERR_INTERNAL = 6,
  CW_ERR_NO_MEMORY = 7
} cw_status;

typedef enum cw_seq_kind { CW_SEQ_U = 0, CW_SEQ_V = 1, CW_SEQ_W = 2 } cw_seq_kind;

typedef enum cw_theta_source {
  CW_THETA_GENERAL = 0,
  CW_THETA_M1 = 1,
  CW_THETA_M2 = 2,
  CW_THETA_GP = 3
} cw_theta_source;

typedef enum cw_format { CW_FORMAT_JSON = 0, CW_FORMAT_TEXT = 1 } cw_format;

typedef enum cw_report_status { CW_REPORT_PASS = 0, CW_REPORT_FAIL = 1 } cw_report_status;

typedef struct cw_poly cw_poly;
typedef struct cw_suite_config cw_suite_config;
typedef struct cw_suite_result cw_suite_result;

CW_API const char* cw_version(void);
CW_API const char* cw_status_string(int status);
CW_API const char* cw_last_error(void);
CW_API void cw_string_free(char* s);

/* Polynomials with integer coefficients in named variables. */
CW_API int cw_poly_parse(const char* text, cw_poly** out);
CW_API int cw_poly_constant(long value, cw_poly** out);
CW_API int cw_poly_variable(const char* name, cw_poly** out);
CW_API void cw_poly_free(cw_poly* f);
CW_API int cw_poly_add(const cw_poly* f, const cw_poly* g, cw_poly** out);
CW_API int cw_poly_sub(const cw_poly* f, const cw_poly* g, cw_poly** out);
CW_API int cw_poly_mul(const cw_poly* f, const cw_poly* g, cw_poly** out);
CW_API int cw_poly_pow(const cw_poly* f, uint32_t e, cw_poly** out);
/* Substitutes values[i] for names[i]; unbound variables are kept. */
CW_API int cw_poly_subst(const cw_poly* f, size_t count, const char* const* names,
                         const cw_poly* const* values, cw_poly** out);
CW_API int cw_poly_equal(const cw_poly* f, const cw_poly* g, int* out);
/* Canonical serialization, e.g. "+1*p^2 -2". */
CW_API int cw_poly_serialize(const cw_poly* f, char** out);

/* Sequences, Omega and theta coefficients. Indices must be nonnegative. */
CW_API int cw_seq(int kind, int n, cw_poly** out);
CW_API int cw_omega(cw_poly** out);
/* m is ignored for the m1, m2 and gp sources. */
CW_API int cw_theta(int source, int k, int r, int m, cw_poly** out);
CW_API int cw_set_sequence_cache_cap(size_t cap);

/* Power sums in the formal variables e1, e2, ... */
CW_API int cw_power_sum_waring(uint32_t k, cw_poly** out);
CW_API int cw_power_sum_newton(uint32_t k, uint32_t num_vars, cw_poly** out);

/* Rational arguments and results are decimal strings "p" or "p/q". */
CW_API int cw_pochhammer(const char* a, uint32_t n, char** out);
CW_API int cw_hyp2f1_terminating(uint32_t n, const char* a, const char* c, char** out);
CW_API int cw_chu_vandermonde_rhs(uint32_t n, const char* a, const char* c, char** out);
CW_API int cw_lemma_lhs(uint32_t k, uint32_t j, char** out);
CW_API int cw_lemma_rhs(uint32_t k, uint32_t j, char** out);

/* Verification suite. */
CW_API int cw_suite_config_new(cw_suite_config** out);
CW_API void cw_suite_config_free(cw_suite_config* cfg);
/* Identity names: theorem1, fundamental, corollary1, corollary2_vs_m2,
 * lemma1, waring_vs_newton, chu_vandermonde, pochhammer_transforms. */
CW_API int cw_suite_config_set_identities(cw_suite_config* cfg, const char* const* names, size_t count);
/* which is one of "k_max", "m_max", "n_max", "j_max"; a negative value
 * restores the per-identity default. */
CW_API int cw_suite_config_set_bound(cw_suite_config* cfg, const char* which, int value);
CW_API int cw_suite_config_set_jobs(cw_suite_config* cfg, unsigned jobs);
CW_API int cw_suite_config_set_seed(cw_suite_config* cfg, uint64_t seed);
CW_API int cw_suite_config_set_samples(cw_suite_config* cfg, int samples);
CW_API int cw_suite_config_set_timings(cw_suite_config* cfg, int enabled);

CW_API int cw_run_suite(const cw_suite_config* cfg, cw_suite_result** out);
CW_API void cw_suite_result_free(cw_suite_result* result);
CW_API int cw_suite_result_summary(const cw_suite_result* result, size_t* total, size_t* pass, size_t* fail);
CW_API size_t cw_suite_result_size(const cw_suite_result* result);
/* Borrowed strings stay valid for the lifetime of the result. */
CW_API int cw_suite_result_report(const cw_suite_result* result, size_t index, const char** identity,
                                  int* status, const char** lhs, const char** rhs);
CW_API int cw_suite_result_render(const cw_suite_result* result, int format, char** out);
/* 0 when every report passed, 1 otherwise. */
CW_API int cw_suite_result_exit_status(const cw_suite_result* result);

/* Test hook: while enabled, the general theta coefficient for (k, r) is off by
 * one. Negative k or r match every value. */
CW_API int cw_testing_set_theta_fault(int enabled, int k, int r);

#ifdef __cplusplus
}
#endif

#endif /* CHEBWARING_H */
