#include "sqrtlat.h"

#include "analysis.hpp"
#include "basis.hpp"
#include "contour.hpp"
#include "gforms.hpp"
#include "hurwitz.hpp"
#include "kloosterman.hpp"
#include "modular.hpp"
#include "phi.hpp"

#include <cstring>
#include <string>

using namespace sqrtlat;

namespace {

sqrtlat_status translate(const std::exception& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e)) return SQRTLAT_EINVAL;
    if (const auto* d = dynamic_cast<const std::domain_error*>(&e)) {
        return std::strstr(d->what(), "pole") ? SQRTLAT_EPOLE : SQRTLAT_EDOMAIN;
    }
    if (dynamic_cast<const std::runtime_error*>(&e)) return SQRTLAT_ETOL;
    return SQRTLAT_EINTERNAL;
}

template <class Fn>
sqrtlat_status guarded(Fn&& fn) {
    try {
        fn();
        return SQRTLAT_OK;
    } catch (const std::exception& e) {
        return translate(e);
    } catch (...) {
        return SQRTLAT_EINTERNAL;
    }
}

}  // namespace

extern "C" {

const char* sqrtlat_strerror(sqrtlat_status st) {
    switch (st) {
        case SQRTLAT_OK: return "ok";
        case SQRTLAT_EINVAL: return "precondition violated";
        case SQRTLAT_EDOMAIN: return "argument outside the method's validity region";
        case SQRTLAT_EPOLE: return "evaluation at a pole";
        case SQRTLAT_ETOL: return "requested tolerance not reached";
        default: return "internal error";
    }
}

sqrtlat_status sqrtlat_reduce(double tau_re, double tau_im, sqrtlat_reduction* out) {
    if (!out) return SQRTLAT_EINVAL;
    return guarded([&] {
        auto red = reduce_point(std::complex<double>(tau_re, tau_im));
        out->a = long(red.gamma.a);
        out->b = long(red.gamma.b);
        out->c = long(red.gamma.c);
        out->d = long(red.gamma.d);
        out->red_re = red.reduced.real();
        out->red_im = red.reduced.imag();
        out->inversions = red.inversions;
        out->height = red.reduced.imag();
    });
}

sqrtlat_status sqrtlat_theta(double tau_re, double tau_im, double* re, double* im) {
    if (!re || !im) return SQRTLAT_EINVAL;
    return guarded([&] {
        auto v = theta_eval(std::complex<double>(tau_re, tau_im));
        *re = v.real();
        *im = v.imag();
    });
}

sqrtlat_status sqrtlat_lambda_j(double tau_re, double tau_im,
                                double* lam_re, double* lam_im,
                                double* j_re, double* j_im) {
    if (!lam_re || !lam_im || !j_re || !j_im) return SQRTLAT_EINVAL;
    return guarded([&] {
        auto lj = lambda_j_eval(std::complex<double>(tau_re, tau_im));
        *lam_re = lj.lambda.real();
        *lam_im = lj.lambda.imag();
        *j_re = lj.J.real();
        *j_im = lj.J.imag();
    });
}

sqrtlat_status sqrtlat_kernel(double tau_re, double tau_im,
                              double z_re, double z_im,
                              double* re, double* im) {
    if (!re || !im) return SQRTLAT_EINVAL;
    return guarded([&] {
        auto v = kernel_eval(std::complex<double>(tau_re, tau_im),
                             std::complex<double>(z_re, z_im));
        *re = v.real();
        *im = v.imag();
    });
}

sqrtlat_status sqrtlat_g(int n, double tau_re, double tau_im, double* re, double* im) {
    if (!re || !im || n < 0) return SQRTLAT_EINVAL;
    return guarded([&] {
        auto v = g_eval(n, std::complex<double>(tau_re, tau_im));
        *re = v.real();
        *im = v.imag();
    });
}

sqrtlat_status sqrtlat_g_expansion(int n, int count, double* out) {
    if (!out || n < 0 || count < 1) return SQRTLAT_EINVAL;
    return guarded([&] {
        HalfIntSeries s = g_expansion(n, 4L * count + 1);
        for (int nu = 1; nu <= count; ++nu)
            out[nu - 1] = to_real<double>(s.coeff(4L * nu));
    });
}

sqrtlat_status sqrtlat_g_cusp1_coeffs(int m, int count, double* out) {
    if (!out || m < 0 || count < 1) return SQRTLAT_EINVAL;
    return guarded([&] {
        auto c = g_cusp1_coefficients(m, count);
        for (int nu = 0; nu < count; ++nu) out[nu] = to_real<double>(c[nu]);
    });
}

int sqrtlat_kronecker(long a, long n) { return kronecker(a, n); }

sqrtlat_status sqrtlat_nu_theta(long a, long b, long c, long d, double* re, double* im) {
    if (!re || !im) return SQRTLAT_EINVAL;
    return guarded([&] {
        auto v = nu_theta(GroupElement(a, b, c, d));
        *re = v.real();
        *im = v.imag();
    });
}

sqrtlat_status sqrtlat_kloosterman(long m, long n, long c, int tilde,
                                   double* re, double* im) {
    if (!re || !im) return SQRTLAT_EINVAL;
    return guarded([&] {
        auto v = tilde ? kloosterman_S_tilde(m, n, c) : kloosterman_S(m, n, c);
        *re = v.real();
        *im = v.imag();
    });
}

sqrtlat_status sqrtlat_rademacher(long m, long n, long c_max, int tilde,
                                  double* value, double* err) {
    if (!value) return SQRTLAT_EINVAL;
    return guarded([&] {
        SeriesValue v = tilde ? rademacher_a_tilde(m, n, c_max)
                              : rademacher_a(m, n, c_max);
        *value = v.value;
        if (err) *err = v.err;
    });
}

sqrtlat_status sqrtlat_hurwitz_zeta(double s, double a, double* out) {
    if (!out) return SQRTLAT_EINVAL;
    return guarded([&] { *out = hurwitz_zeta(s, a).convert_to<double>(); });
}

sqrtlat_status sqrtlat_phi(double z_re, double z_im, double* re, double* im) {
    if (!re || !im) return SQRTLAT_EINVAL;
    return guarded([&] {
        auto v = phi(std::complex<double>(z_re, z_im));
        *re = v.real();
        *im = v.imag();
    });
}

sqrtlat_status sqrtlat_psi(double x, double* out) {
    if (!out) return SQRTLAT_EINVAL;
    return guarded([&] { *out = psi(x); });
}

sqrtlat_status sqrtlat_theta_sum(double x, double y_cut,
                                 double* partial_re, double* partial_im,
                                 double* tail_re, double* tail_im) {
    if (!partial_re || !partial_im || !tail_re || !tail_im) return SQRTLAT_EINVAL;
    return guarded([&] {
        std::complex<double> partial, tail;
        theta_sum(x, y_cut, partial, tail);
        *partial_re = partial.real();
        *partial_im = partial.imag();
        *tail_re = tail.real();
        *tail_im = tail.imag();
    });
}

sqrtlat_status sqrtlat_psi_moment(double t, double* out) {
    if (!out) return SQRTLAT_EINVAL;
    return guarded([&] { *out = psi_moment(t); });
}

struct sqrtlat_solver {
    CollocationSolver impl;
};

sqrtlat_status sqrtlat_solver_new(int n, double height, sqrtlat_solver** out) {
    if (!out) return SQRTLAT_EINVAL;
    *out = nullptr;
    return guarded([&] {
        *out = new sqrtlat_solver{CollocationSolver(n, height <= 0 ? -1.0 : height)};
    });
}

void sqrtlat_solver_free(sqrtlat_solver* s) { delete s; }

int sqrtlat_solver_size(const sqrtlat_solver* s) { return s ? s->impl.size() + 1 : 0; }

double sqrtlat_solver_cond(const sqrtlat_solver* s) {
    return s ? s->impl.cond_estimate() : 0.0;
}

int sqrtlat_solver_trusted(const sqrtlat_solver* s) { return s ? s->impl.trusted() : -1; }

sqrtlat_status sqrtlat_solver_eval(sqrtlat_solver* s, double x,
                                   double* values, double* err) {
    if (!s || !values) return SQRTLAT_EINVAL;
    return guarded([&] {
        double e;
        std::vector<double> v = s->impl.eval(x, &e);
        for (size_t i = 0; i < v.size(); ++i) values[i] = v[i];
        if (err) *err = e;
    });
}

sqrtlat_status sqrtlat_eval_contour(int n, double z_re, double z_im,
                                    int precision_bits,
                                    double* re, double* im, double* err) {
    if (!re || !im) return SQRTLAT_EINVAL;
    return guarded([&] {
        ContourResult r = eval_contour(n, {z_re, z_im}, precision_bits);
        *re = r.value.real();
        *im = r.value.imag();
        if (err) *err = r.err;
        if (!r.converged) throw std::runtime_error("quadrature refinement stalled");
    });
}

sqrtlat_status sqrtlat_eval_laplace(int n, double x, int nu_max,
                                    double* value, double* err) {
    if (!value) return SQRTLAT_EINVAL;
    return guarded([&] {
        EvalResult r = eval_laplace(n, x, nu_max);
        *value = r.value.real();
        if (err) *err = r.err;
    });
}

sqrtlat_status sqrtlat_eval_phi_approx(int n, double z_re, double z_im,
                                       double* re, double* im, double* err) {
    if (!re || !im) return SQRTLAT_EINVAL;
    return guarded([&] {
        EvalResult r = eval_phi_approx(n, {z_re, z_im});
        *re = r.value.real();
        *im = r.value.imag();
        if (err) *err = r.err;
    });
}

sqrtlat_status sqrtlat_generating_f(double tau_re, double tau_im, double x, int n_terms,
                                    double* re, double* im, double* residual) {
    if (!re || !im) return SQRTLAT_EINVAL;
    return guarded([&] {
        double res;
        auto v = generating_F({tau_re, tau_im}, x, n_terms, res);
        *re = v.real();
        *im = v.imag();
        if (residual) *residual = res;
    });
}

sqrtlat_status sqrtlat_real_zeros(int n, double a, double b, double grid_step,
                                  double* zeros, int cap, int* count) {
    if (!zeros || !count || cap < 0) return SQRTLAT_EINVAL;
    return guarded([&] {
        ZeroReport rep = real_zeros(n, a, b, grid_step);
        *count = int(rep.real_zeros.size());
        for (int i = 0; i < cap && i < *count; ++i) zeros[i] = rep.real_zeros[i];
    });
}

sqrtlat_status sqrtlat_count_zeros_delta(int n, double t1, double t2, int* count) {
    if (!count) return SQRTLAT_EINVAL;
    return guarded([&] { *count = int(count_zeros_delta(n, t1, t2).count); });
}

sqrtlat_status sqrtlat_count_zeros_rect(int n, double r, int* count) {
    if (!count) return SQRTLAT_EINVAL;
    return guarded([&] { *count = int(count_zeros_rectangle(n, r).count); });
}

sqrtlat_status sqrtlat_moment(sqrtlat_solver* s, int n, double a, double b,
                              double* value, double* err) {
    if (!value) return SQRTLAT_EINVAL;
    return guarded([&] {
        MomentResult r = moment_fn(n, a, b, s ? &s->impl : nullptr);
        *value = r.value;
        if (err) *err = r.err;
    });
}

sqrtlat_status sqrtlat_l2_sum(int xi, double x_cut, double* value, double* err) {
    if (!value) return SQRTLAT_EINVAL;
    return guarded([&] {
        MomentResult r = l2_sum(xi, x_cut);
        *value = r.value;
        if (err) *err = r.err;
    });
}

sqrtlat_status sqrtlat_histogram_values(double x0, int n_max, double* out) {
    if (!out) return SQRTLAT_EINVAL;
    return guarded([&] {
        std::vector<double> v = histogram_values(x0, n_max);
        for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    });
}

sqrtlat_status sqrtlat_verify_interp(double t, const double* x_grid, int n_grid,
                                     int n_trunc, double* max_err) {
    if (!x_grid || !max_err || n_grid < 1) return SQRTLAT_EINVAL;
    return guarded([&] {
        std::vector<double> grid(x_grid, x_grid + n_grid);
        *max_err = verify_interpolation(t, grid, n_trunc);
    });
}

}  // extern "C"
