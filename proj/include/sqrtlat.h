#ifndef SQRTLAT_H
#define SQRTLAT_H

/* C interface to the sqrtlat library.
 *
 * All functions return a status code; results are written through out
 * parameters. Complex values are passed as (re, im) double pairs.
 * Handles returned by *_new functions must be released with the matching
 * *_free function.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SQRTLAT_OK = 0,
    SQRTLAT_EINVAL = 1,   /* precondition violated */
    SQRTLAT_EDOMAIN = 2,  /* argument outside a method's validity region */
    SQRTLAT_EPOLE = 3,    /* evaluation at a pole */
    SQRTLAT_ETOL = 4,     /* requested tolerance not reached */
    SQRTLAT_EINTERNAL = 5
} sqrtlat_status;

const char* sqrtlat_strerror(sqrtlat_status st);

/* ---- fundamental domain reduction ---- */

typedef struct {
    long a, b, c, d;       /* group element mapping the input into the domain */
    double red_re, red_im; /* reduced point */
    int inversions;        /* number of inversion steps in the reduction word */
    double height;         /* imaginary part of the reduced point (invariant) */
} sqrtlat_reduction;

sqrtlat_status sqrtlat_reduce(double tau_re, double tau_im, sqrtlat_reduction* out);

/* ---- pointwise modular evaluation ---- */

sqrtlat_status sqrtlat_theta(double tau_re, double tau_im, double* re, double* im);
sqrtlat_status sqrtlat_lambda_j(double tau_re, double tau_im,
                                double* lam_re, double* lam_im,
                                double* j_re, double* j_im);
sqrtlat_status sqrtlat_kernel(double tau_re, double tau_im,
                              double z_re, double z_im,
                              double* re, double* im);

/* g_n pointwise at tau (weight 3/2 form with principal part q^{-n/2}). */
sqrtlat_status sqrtlat_g(int n, double tau_re, double tau_im, double* re, double* im);

/* ---- expansions ---- */

/* Coefficients a_{n,nu} of g_n at the infinite cusp: writes values for
 * nu = 1..count into out (exponent nu/2). */
sqrtlat_status sqrtlat_g_expansion(int n, int count, double* out);

/* Coefficients of the expansion of g_m at the other cusp: writes values for
 * nu = 0..count-1 into out (exponent nu + 3/8). */
sqrtlat_status sqrtlat_g_cusp1_coeffs(int m, int count, double* out);

/* ---- arithmetic / Kloosterman layer ---- */

int sqrtlat_kronecker(long a, long n);

sqrtlat_status sqrtlat_nu_theta(long a, long b, long c, long d, double* re, double* im);

/* tilde = 0: sum over residues mod 2c (any c >= 1).
 * tilde = 1: odd-c double coset sum. */
sqrtlat_status sqrtlat_kloosterman(long m, long n, long c, int tilde,
                                   double* re, double* im);

/* Truncated coefficient series. tilde = 0 computes a_{m,n} (m,n >= 1),
 * tilde = 1 computes the cusp-1 coefficient for index n >= 0 (odd c only). */
sqrtlat_status sqrtlat_rademacher(long m, long n, long c_max, int tilde,
                                  double* value, double* err);

/* ---- special functions ---- */

sqrtlat_status sqrtlat_hurwitz_zeta(double s, double a, double* out);
sqrtlat_status sqrtlat_phi(double z_re, double z_im, double* re, double* im);
sqrtlat_status sqrtlat_psi(double x, double* out);
/* Partial sum over n <= y_cut plus accelerated tail, returned separately. */
sqrtlat_status sqrtlat_theta_sum(double x, double y_cut,
                                 double* partial_re, double* partial_im,
                                 double* tail_re, double* tail_im);
/* (1/(T log T)) * integral of Psi^2 over [T, 2T]. */
sqrtlat_status sqrtlat_psi_moment(double t, double* out);

/* ---- basis function evaluation ---- */

typedef struct sqrtlat_solver sqrtlat_solver;

/* height <= 0 selects the default 10/N. */
sqrtlat_status sqrtlat_solver_new(int n, double height, sqrtlat_solver** out);
void sqrtlat_solver_free(sqrtlat_solver* s);
int sqrtlat_solver_size(const sqrtlat_solver* s);
double sqrtlat_solver_cond(const sqrtlat_solver* s);
/* Largest n whose values the solver reports as trustworthy. */
int sqrtlat_solver_trusted(const sqrtlat_solver* s);

/* Solves for f_n(x), n = 0..size-1, writing values and the shared error
 * estimate (max imaginary residual of the solve). */
sqrtlat_status sqrtlat_solver_eval(sqrtlat_solver* s, double x,
                                   double* values, double* err);

sqrtlat_status sqrtlat_eval_contour(int n, double z_re, double z_im,
                                    int precision_bits,
                                    double* re, double* im, double* err);
sqrtlat_status sqrtlat_eval_laplace(int n, double x, int nu_max,
                                    double* value, double* err);
sqrtlat_status sqrtlat_eval_phi_approx(int n, double z_re, double z_im,
                                       double* re, double* im, double* err);

/* Partial generating-function sum and its functional-equation residual. */
sqrtlat_status sqrtlat_generating_f(double tau_re, double tau_im, double x, int n_terms,
                                    double* re, double* im, double* residual);

/* ---- analysis ---- */

/* Real zeros of f_n(x)/sin(pi(x-n)) in [a, b]; writes up to cap zeros,
 * sets *count to the number found. */
sqrtlat_status sqrtlat_real_zeros(int n, double a, double b, double grid_step,
                                  double* zeros, int cap, int* count);

sqrtlat_status sqrtlat_count_zeros_delta(int n, double t1, double t2, int* count);
sqrtlat_status sqrtlat_count_zeros_rect(int n, double r, int* count);

/* Integral of f_n^2 over [a, b] using the supplied solver (may be NULL,
 * in which case one is built internally). */
sqrtlat_status sqrtlat_moment(sqrtlat_solver* s, int n, double a, double b,
                              double* value, double* err);

sqrtlat_status sqrtlat_l2_sum(int xi, double x_cut, double* value, double* err);

/* Values n^{1/4} f_n(x0) for n = 1..n_max. */
sqrtlat_status sqrtlat_histogram_values(double x0, int n_max, double* out);

/* Max over the grid of |G_t(x) - sum_n G_t(sqrt n) f_n(x^2)| where
 * G_t(x) = e^{-pi t x^2} + t^{-1/2} e^{-pi x^2 / t}. */
sqrtlat_status sqrtlat_verify_interp(double t, const double* x_grid, int n_grid,
                                     int n_trunc, double* max_err);

#ifdef __cplusplus
}
#endif

#endif /* SQRTLAT_H */
