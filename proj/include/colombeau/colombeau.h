#ifndef COLOMBEAU_H
#define COLOMBEAU_H

#include <stddef.h>

#if defined(COLOMBEAU_BUILDING_LIBRARY)
#define CB_API __attribute__((visibility("default")))
#else
#define CB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cb_status {
    CB_OK = 0,
    CB_INVALID_ARGUMENT = 1,
    CB_CERTIFICATE = 2,     /* certified base left its interval */
    CB_QUADRATURE = 3,      /* subdivision budget exhausted */
    CB_UNSUPPORTED = 4,     /* support could not be bounded */
    CB_NO_SHOCK = 5,        /* no admissible jump-speed root */
    CB_SOLVER = 6,          /* finite-volume run aborted */
    CB_NO_JUMP = 7,
    CB_PARSE = 8,           /* malformed JSON */
    CB_IO = 9,
    CB_INTERNAL = 10
} cb_status;

/* Opaque generalized function: an expression tree in (x, eps). */
typedef struct cb_genfun cb_genfun;

CB_API const char* cb_version(void);
CB_API const char* cb_status_name(cb_status status);

/* Message of the last failing call on this thread ("" after success). */
CB_API const char* cb_last_error(void);

/* Strings returned through char** are owned by the caller. */
CB_API void cb_string_free(char* s);

CB_API void cb_genfun_free(cb_genfun* g);

CB_API cb_status cb_genfun_constant(double value, cb_genfun** out);
CB_API cb_status cb_genfun_x(cb_genfun** out);
CB_API cb_status cb_genfun_eps(cb_genfun** out);
/* Profile names: "bump", "bump-squared", "bump-skewed", or "<name>^<n>". */
CB_API cb_status cb_genfun_heaviside(const char* profile, cb_genfun** out);
CB_API cb_status cb_genfun_dirac(const char* profile, cb_genfun** out);

CB_API cb_status cb_genfun_add(const cb_genfun* a, const cb_genfun* b, cb_genfun** out);
CB_API cb_status cb_genfun_sub(const cb_genfun* a, const cb_genfun* b, cb_genfun** out);
CB_API cb_status cb_genfun_mul(const cb_genfun* a, const cb_genfun* b, cb_genfun** out);
CB_API cb_status cb_genfun_scale(const cb_genfun* a, double r, cb_genfun** out);
CB_API cb_status cb_genfun_pow(const cb_genfun* a, int n, cb_genfun** out);
/* Negative powers need a certificate lo < a < hi excluding 0. */
CB_API cb_status cb_genfun_pow_certified(const cb_genfun* a, int n, double lo, double hi, cb_genfun** out);
CB_API cb_status cb_genfun_differentiate(const cb_genfun* a, int order, cb_genfun** out);

CB_API cb_status cb_genfun_from_json(const char* json, cb_genfun** out);
CB_API cb_status cb_genfun_to_json(const cb_genfun* g, char** json_out);

CB_API cb_status cb_genfun_evaluate(const cb_genfun* g, double x, double eps, double* value);

/* int g(x, eps) dx over the effective support. */
CB_API cb_status cb_integrate(const cb_genfun* g, double eps, double* value, double* error);

/* int g(x, eps) phi(x) dx, phi = amplitude exp(1 - 1/(1 - t^2)), t = (x - center)/halfwidth. */
CB_API cb_status cb_pair(const cb_genfun* g, double center, double halfwidth, double amplitude, double eps,
                         double* value, double* error);

/* Admissible jump speeds for rho_l (u_l - c)(u_l + A (u_r - u_l) - c) = 1,
   largest first. speeds must hold 2 values; *count receives how many. */
CB_API cb_status cb_shock_speeds(double rho_l, double u_l, double tau_l, double u_r, double A, double* speeds,
                                 size_t* count);

/* Names of the batch commands, NULL-terminated. */
CB_API const char* const* cb_command_names(void);

/* Runs a batch command. config_json may be NULL or "" for defaults. On CB_OK,
   *report_json holds the JSON report and *passed its pass criterion (0 or 1). */
CB_API cb_status cb_run_command(const char* command, const char* config_json, char** report_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif
