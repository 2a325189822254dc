/* C interface to the qbound library: quadrature rules of the family
 *   R(f) = (1-theta)(lambda f(a) + (1-lambda) f(b)) + theta f(C),
 *   C = (1-lambda) a + lambda b,
 * which approximate the mean of f over [a,b], together with certified
 * a-priori error bounds valid when |f'|^q is quasi-convex, plus adaptive
 * integration, parameter sweeps, and the classical special means.
 *
 * All functions returning qb_status leave their outputs untouched on
 * failure; qb_last_error_message()/qb_last_error_position() describe the
 * most recent failure on the calling thread.
 */
#ifndef QBOUND_H
#define QBOUND_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qb_status {
    QB_OK = 0,
    QB_ERR_NULL_ARGUMENT = 1,
    QB_ERR_SYNTAX = 2,            /* malformed expression text */
    QB_ERR_DOMAIN = 3,            /* evaluation outside the math domain */
    QB_ERR_INVALID_ARGUMENT = 4,  /* parameter violates a contract */
    QB_ERR_UNSUPPORTED_EXPONENT = 5, /* q outside a bound's supported range */
    QB_ERR_NOT_QUASICONVEX = 6,   /* precondition sampling check failed */
    QB_ERR_NO_CONVERGENCE = 7,    /* refinement hit its depth limit */
    QB_ERR_INTERNAL = 8
} qb_status;

/* Opaque handles. Free with the matching *_free function. */
typedef struct qb_expr qb_expr;
typedef struct qb_certified qb_certified;
typedef struct qb_sweep qb_sweep;

const char* qb_version(void);

/* Description of the most recent failure on this thread; empty string if
 * none. The position is the 0-based byte offset for syntax errors and
 * (size_t)-1 otherwise. */
const char* qb_last_error_message(void);
size_t qb_last_error_position(void);

/* ------------------------------------------------------------------ *
 * Expressions: one real variable `x`; grammar with + - * / ^, unary
 * minus, parentheses, numeric literals, and exp, ln, sin, cos, abs,
 * sqrt. Derivatives come from forward-mode dual numbers.
 * ------------------------------------------------------------------ */
qb_status qb_expr_parse(const char* text, qb_expr** out);
void qb_expr_free(qb_expr* e);

/* Canonical text form; the string lives as long as the handle. */
const char* qb_expr_text(const qb_expr* e);

qb_status qb_expr_eval(const qb_expr* e, double x, double* out);
qb_status qb_expr_derivative(const qb_expr* e, double x, double* out);

/* ------------------------------------------------------------------ *
 * Rule family and certified bounds.
 * ------------------------------------------------------------------ */

/* Named parameter points: "simpson" (2/3, 1/2), "midpoint" (1, 1/2),
 * "trapezoid" (0, 1/2). */
qb_status qb_preset(const char* name, double* theta, double* lambda);

qb_status qb_inner_node(double theta, double lambda, double a, double b, double* out);
qb_status qb_rule_value(const qb_expr* f, double a, double b, double theta, double lambda,
                        double* out);

/* Kernel moments over [0,1]: integral of |t-theta| dt, and of |t-theta|^p dt. */
qb_status qb_kernel_moment_pm(double theta, double* out);
qb_status qb_kernel_moment_holder(double theta, double p, double* out);

/* Mean of f over [a,b] by adaptive quadrature; tol is absolute on the
 * mean and must be >= 1e-14. */
qb_status qb_reference_mean(const qb_expr* f, double a, double b, double tol, double* out);

typedef struct qb_qc_report {
    int is_quasiconvex;
    size_t valley_index; /* meaningful only when is_quasiconvex */
    double max_violation;
    size_t samples;
} qb_qc_report;

/* Sampled quasi-convexity check of |f'|^q on [a,b]; q >= 1.
 * n_samples == 0 selects the default resolution. A failed check is a
 * successful call (QB_OK with is_quasiconvex == 0). */
qb_status qb_check_quasiconvex(const qb_expr* f, double a, double b, double q,
                               size_t n_samples, qb_qc_report* out);

typedef struct qb_bound_report {
    double rule_value;
    double reference_mean;
    double actual_error;      /* |rule_value - reference_mean| */
    double bound_power_mean;
    double bound_holder;      /* meaningful only when has_holder */
    int has_holder;           /* set when q > 1 */
    int pm_valid;             /* actual error within bound (+ rounding slack) */
    int holder_valid;
} qb_bound_report;

/* Rule value, reference mean, and both error bounds in one record.
 * oracle_tol is the reference-mean tolerance (>= 1e-14). The bounds are
 * certificates only when |f'|^q is quasi-convex on [a,b]; check first. */
qb_status qb_bound_report_run(const qb_expr* f, double a, double b, double theta, double lambda,
                              double q, double oracle_tol, qb_bound_report* out);

/* |(rule - mean) - (b-a)[-(lambda^2) I_a + (1-lambda)^2 I_b]| where I_x
 * integrates (t-theta) f'(t x + (1-t) C) over [0,1]. */
qb_status qb_verify_identity(const qb_expr* f, double a, double b, double theta, double lambda,
                             double tol, double* residual);

/* Gaps (mean - f(midpoint)) and ((f(a)+f(b))/2 - mean); both are
 * non-negative when f is convex. */
qb_status qb_verify_hermite_hadamard(const qb_expr* f, double a, double b, double* lower_gap,
                                     double* upper_gap);

/* ------------------------------------------------------------------ *
 * Certified integration: composite rules whose total error bound is the
 * sum of per-piece certificates (integral scale).
 * ------------------------------------------------------------------ */

/* Greedy worst-first bisection until the certified bound is <= tol or
 * every piece has been split max_depth times (max_depth == 0 selects the
 * default). A result that stopped early is still returned, with the
 * converged flag cleared; the call itself succeeds. */
qb_status qb_certified_integrate(const qb_expr* f, double a, double b, double theta,
                                 double lambda, double q, double tol, size_t max_depth,
                                 int skip_qc_check, qb_certified** out);

/* Uniform partition into n_subintervals pieces. */
qb_status qb_composite_fixed(const qb_expr* f, double a, double b, double theta, double lambda,
                             double q, size_t n_subintervals, qb_certified** out);

double qb_certified_estimate(const qb_certified* r);
double qb_certified_bound(const qb_certified* r);
int qb_certified_converged(const qb_certified* r);
size_t qb_certified_count(const qb_certified* r);
qb_status qb_certified_piece(const qb_certified* r, size_t index, double* piece_a,
                             double* piece_b, double* local_bound);
void qb_certified_free(qb_certified* r);

/* ------------------------------------------------------------------ *
 * Parameter sweeps.
 * ------------------------------------------------------------------ */

typedef struct qb_sweep_row {
    double theta;
    double lambda;
    double q;
    double rule_value;
    double reference_mean;
    double actual_error;
    double bound_pm;
    double bound_holder;      /* meaningful only when has_holder */
    double sharpness_pm;      /* actual_error / bound_pm, 0 when the bound is 0 */
    double sharpness_holder;  /* meaningful only when has_holder */
    int has_holder;
} qb_sweep_row;

/* One row per (theta, lambda, q), theta outermost, q innermost. The
 * reference mean is computed once. max_threads == 0 uses the hardware
 * concurrency; the result does not depend on the thread count. */
qb_status qb_sweep_run(const qb_expr* f, double a, double b, const double* thetas,
                       size_t n_thetas, const double* lambdas, size_t n_lambdas,
                       const double* qs, size_t n_qs, unsigned max_threads, qb_sweep** out);

size_t qb_sweep_count(const qb_sweep* s);
qb_status qb_sweep_row_get(const qb_sweep* s, size_t index, qb_sweep_row* out);
void qb_sweep_free(qb_sweep* s);

/* ------------------------------------------------------------------ *
 * Special means and the four inequality propositions.
 * ------------------------------------------------------------------ */
qb_status qb_mean_weighted_arithmetic(double alpha, double a, double b, double* out);
qb_status qb_mean_arithmetic(double a, double b, double* out);
qb_status qb_mean_weighted_harmonic(double alpha, double a, double b, double* out);
qb_status qb_mean_harmonic(double a, double b, double* out);
qb_status qb_mean_logarithmic(double a, double b, double* out);
/* L_n(a,b); and its n-th power (the mean of x^n over [a,b]). */
qb_status qb_mean_n_logarithmic(int n, double a, double b, double* out);
qb_status qb_mean_n_logarithmic_pow(int n, double a, double b, double* out);

typedef struct qb_prop_result {
    double lhs;
    double rhs;
    double slack; /* rounding headroom admitted by holds */
    int holds;    /* lhs <= rhs + slack */
} qb_prop_result;

/* which selects the instance:
 *   1: f = x^n against the power-mean bound (q >= 1)
 *   2: f = x^n against the conjugate-exponent bound (q > 1)
 *   3: f = 1/x against the power-mean bound, 0 < a < b (q >= 1)
 *   4: f = 1/x against the conjugate-exponent bound, 0 < a < b (q > 1)
 * n (>= 2) is read only for 1 and 2. */
qb_status qb_proposition_run(int which, int n, double theta, double lambda, double q, double a,
                             double b, qb_prop_result* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QBOUND_H */
