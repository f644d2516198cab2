#ifndef CHARFORGE_CHARFORGE_H
#define CHARFORGE_CHARFORGE_H

#include <stdint.h>

#if defined(_WIN32)
#define CF_API __declspec(dllexport)
#else
#define CF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
    CF_OK = 0,
    CF_EINVAL = 1,        /* rejected parameters or violated precondition */
    CF_EUNSUPPORTED = 2,  /* outside the supported families or sizes */
    CF_ELIMIT = 3,        /* computation larger than the built-in bounds */
    CF_EINTERNAL = 4
} cf_status;

typedef struct cf_session cf_session;
typedef struct cf_result cf_result;

CF_API const char* cf_version(void);
CF_API const char* cf_status_string(cf_status s);

/* A session owns the last error message. Sessions may be used from one thread at a time. */
CF_API cf_session* cf_session_new(void);
CF_API void cf_session_free(cf_session* s);
/* Message of the last failing call on s, "" after a success. */
CF_API const char* cf_session_error(const cf_session* s);

/* Text owned by the result (JSON, or CSV when a verify config asks for it); valid until
   cf_result_free. */
CF_API const char* cf_result_text(const cf_result* r);
CF_API void cf_result_free(cf_result* r);

/* Normalized Gauss sum of the character alpha (exponent on the field generator) of F_{q^k}. */
CF_API cf_status cf_gauss(cf_session* s, int64_t q, int k, int64_t alpha, int psi_scale, double* re, double* im);

/* J_chi(g) for g in GL_k(F_q); entries are base-p polynomial codes, row-major, k*k of them. */
CF_API cf_status cf_jacobi_kernel(cf_session* s, int64_t q, int k, const int64_t* codes, int64_t chi, int psi_scale,
                                  double* re, double* im);

/* type is one of GL, U, Sp, SO, SO+, SO-, GSp, GSO+, GSO-. */
CF_API cf_status cf_group_order(cf_session* s, const char* type, int n, int64_t q, int64_t* order);
CF_API cf_status cf_torus_catalog(cf_session* s, const char* type, int n, int64_t q, cf_result** out);

/* request: {"type", "n", "q", "lambda_plus", "lambda_minus", "alpha", "theta" (classical) or
   "beta" and "nu" (similitude), "chi", "psi_scale"}; result {gamma, c_V, R1, lhs, rhs}. */
CF_API cf_status cf_dl_gamma(cf_session* s, const char* request_json, cf_result** out);

/* config: {"suites", "q", "k", "m", "chi", "theta", "alpha", "psi_scale", "groups", "tol",
   "sample", "seed", "workers", "format"}; every key optional, groups as "Sp:1" strings. *all_pass is 1 when every report passes. */
CF_API cf_status cf_verify(cf_session* s, const char* config_json, cf_result** out, int* all_pass);

/* One record per character-table invariant of GL_2(F_q), q in {3, 5, 7}. */
CF_API cf_status cf_gl2_selftest(cf_session* s, int q, cf_result** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
