/* bifkit — equilibrium-curve continuation and bifurcation analysis.
 *
 * C interface of the shared library. All objects are opaque handles owned
 * by the library; every fallible call returns a bifkit_status, and
 * bifkit_last_error() describes the most recent failure on the calling
 * thread.
 */
#ifndef BIFKIT_H
#define BIFKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BIFKIT_API __declspec(dllexport)
#else
#define BIFKIT_API __attribute__((visibility("default")))
#endif

typedef enum bifkit_status {
  BIFKIT_OK = 0,
  BIFKIT_ERR_INVALID_ARGUMENT = 1,
  BIFKIT_ERR_BAD_CONFIG = 2,
  BIFKIT_ERR_SEED_FAILED = 3,
  BIFKIT_ERR_TRACE_ABORTED = 4,
  BIFKIT_ERR_LOCATE_FAILED = 5,
  BIFKIT_ERR_SINGULAR = 6,
  BIFKIT_ERR_NO_CONVERGENCE = 7,
  BIFKIT_ERR_DOMAIN = 8,
  BIFKIT_ERR_BLOW_UP = 9,
  BIFKIT_ERR_IO = 10,
  BIFKIT_ERR_UNKNOWN_MODEL = 11,
  BIFKIT_ERR_INTERNAL = 12
} bifkit_status;

/* Static name of a status code. */
BIFKIT_API const char* bifkit_status_str(bifkit_status status);

/* Message of the last error on this thread (empty string if none). */
BIFKIT_API const char* bifkit_last_error(void);

BIFKIT_API const char* bifkit_version(void);

/* ------------------------------------------------------------------ */
/* Dynamical systems                                                   */
/* ------------------------------------------------------------------ */

typedef struct bifkit_system bifkit_system;

/* Models: "lr1", "fold_nf", "hopf_nf", "circle". */
BIFKIT_API bifkit_status bifkit_system_create(const char* model, bifkit_system** out);
BIFKIT_API void bifkit_system_destroy(bifkit_system* sys);

/* lr1 only: set a model parameter (C_m, g_Na, g_si, g_K, g_K1, g_Kp,
 * g_b, Na_o, Na_i, K_o, K_i, PR_NaK, E_b, T) before first use. */
BIFKIT_API bifkit_status bifkit_system_set_param(bifkit_system* sys, const char* key,
                                                 double value);

BIFKIT_API int bifkit_system_dim(const bifkit_system* sys);

/* f must hold dim doubles. */
BIFKIT_API bifkit_status bifkit_system_eval(const bifkit_system* sys, double lambda,
                                            const double* u, double* f);
/* jac must hold dim*dim doubles (row-major d f_i / d u_j). */
BIFKIT_API bifkit_status bifkit_system_jacobian(const bifkit_system* sys, double lambda,
                                                const double* u, double* jac);

/* ------------------------------------------------------------------ */
/* Diagram runs                                                        */
/* ------------------------------------------------------------------ */

typedef struct bifkit_config bifkit_config;

/* A config starts from the per-model defaults; entries set here (same
 * keys as the configuration file: model, seed_lambda, seed_guess, ds,
 * max_steps, newton_tol, newton_max_iter, direction, lambda_min,
 * lambda_max, locate_tol, locate_max_iter, and lr1 parameter names)
 * override file entries, which override the defaults. */
BIFKIT_API bifkit_status bifkit_config_create(bifkit_config** out);
BIFKIT_API void bifkit_config_destroy(bifkit_config* config);
BIFKIT_API bifkit_status bifkit_config_load_file(bifkit_config* config, const char* path);
BIFKIT_API bifkit_status bifkit_config_set(bifkit_config* config, const char* key,
                                           const char* value);

typedef struct bifkit_diagram bifkit_diagram;

/* Run the full pipeline (seed, trace, scan, locate). */
BIFKIT_API bifkit_status bifkit_diagram_compute(const bifkit_config* config,
                                                bifkit_diagram** out);
BIFKIT_API void bifkit_diagram_destroy(bifkit_diagram* diagram);

BIFKIT_API int bifkit_diagram_point_count(const bifkit_diagram* diagram);
BIFKIT_API int bifkit_diagram_dim(const bifkit_diagram* diagram);

#define BIFKIT_STABLE 0
#define BIFKIT_UNSTABLE 1
#define BIFKIT_MARGINAL 2

/* Any output pointer may be NULL; u must hold dim doubles,
 * eig_re / eig_im dim doubles each. */
BIFKIT_API bifkit_status bifkit_diagram_point(const bifkit_diagram* diagram, int index,
                                              double* s, double* lambda, double* u,
                                              double* psi_lp, double* psi_h,
                                              int* stability, double* eig_re,
                                              double* eig_im);

#define BIFKIT_EVENT_LIMIT_POINT 0
#define BIFKIT_EVENT_HOPF 1
#define BIFKIT_EVENT_NEUTRAL_SADDLE 2

typedef struct bifkit_event_info {
  int kind;                /* BIFKIT_EVENT_* */
  double bracket_lambda_lo;
  double bracket_lambda_hi;
  int located;             /* 1 when a refined solution is attached */
  double lambda;           /* located point (valid when located) */
  double beta;             /* Hopf angular frequency (Hopf only) */
  double residual;
  int iterations;
} bifkit_event_info;

BIFKIT_API int bifkit_diagram_event_count(const bifkit_diagram* diagram);
BIFKIT_API bifkit_status bifkit_diagram_event(const bifkit_diagram* diagram, int index,
                                              bifkit_event_info* out);
/* State vector of a located event; u must hold dim doubles. */
BIFKIT_API bifkit_status bifkit_diagram_event_state(const bifkit_diagram* diagram,
                                                    int index, double* u);

/* Write <prefix>_curve.csv and <prefix>_events.json. */
BIFKIT_API bifkit_status bifkit_diagram_write(const bifkit_diagram* diagram,
                                              const char* output_prefix);

#ifdef __cplusplus
}
#endif

#endif /* BIFKIT_H */
