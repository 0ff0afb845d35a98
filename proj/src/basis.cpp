#include "basis.hpp"

#include "gforms.hpp"
#include "kloosterman.hpp"
#include "phi.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sqrtlat {

namespace {

const double pi_d = 3.14159265358979323846;

std::complex<double> inv_sqrt_tau_i(std::complex<double> tau) {
    // (tau/i)^{-1/2}, principal branch
    return 1.0 / std::sqrt(std::complex<double>(tau.imag(), -tau.real()));
}

std::complex<double> basis_term(int n, std::complex<double> tau,
                                std::complex<double> rt) {
    std::complex<double> ipi(0, pi_d);
    return std::exp(ipi * double(n) * tau) + rt * std::exp(-ipi * double(n) / tau);
}

}  // namespace

CollocationSolver::CollocationSolver(int N, double height)
    : N_(N), height_(height < 0 ? 10.0 / N : height) {
    if (N < 8) throw std::invalid_argument("truncation size too small to resolve the frequencies");
    if (!(height_ > 0)) throw std::invalid_argument("nodes must lie in the upper half plane");
    Eigen::MatrixXcd M(N + 1, N + 1);
    for (int j = 0; j <= N; ++j) {
        std::complex<double> tau(-1.0 + 2.0 * j / N, height_);
        std::complex<double> rt = inv_sqrt_tau_i(tau);
        for (int n = 0; n <= N; ++n) M(j, n) = basis_term(n, tau, rt);
    }
    // the columns decay like e^{-pi n height}; equilibrate so the recorded
    // condition number measures genuine ill-posedness, not column scale
    colscale_.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        double norm = M.col(n).cwiseAbs().maxCoeff();
        colscale_[n] = norm > 0 ? 1.0 / norm : 1.0;
        M.col(n) *= colscale_[n];
    }
    lu_.compute(M);
    cond_ = 1.0 / lu_.rcond();
    if (!(cond_ < 1e12))
        throw std::runtime_error("collocation matrix too ill-conditioned (pivot ratio " +
                                 std::to_string(cond_) + ", size " + std::to_string(N) + ")");
    trusted_ = std::max(0, std::min(N - 50, (N * 10) / 12));
}

Eigen::VectorXcd CollocationSolver::solve_raw(std::complex<double> x) const {
    Eigen::VectorXcd rhs(N_ + 1);
    std::complex<double> ipi(0, pi_d);
    for (int j = 0; j <= N_; ++j) {
        std::complex<double> tau(-1.0 + 2.0 * j / N_, height_);
        std::complex<double> rt = inv_sqrt_tau_i(tau);
        rhs(j) = std::exp(ipi * x * tau) + rt * std::exp(-ipi * x / tau);
    }
    Eigen::VectorXcd y = lu_.solve(rhs);
    for (int n = 0; n <= N_; ++n) y(n) *= colscale_[n];
    return y;
}

std::vector<double> CollocationSolver::eval(double x, double* err) const {
    if (x < 0) throw std::invalid_argument("collocation characterization needs x >= 0");
    Eigen::VectorXcd v = solve_raw(std::complex<double>(x, 0));
    std::vector<double> out(N_ + 1);
    double worst = 0;
    for (int n = 0; n <= N_; ++n) {
        out[n] = v(n).real();
        worst = std::max(worst, std::fabs(v(n).imag()));
    }
    if (err) *err = worst;
    return out;
}

int solver_size_for(int n_max) {
    return std::max(n_max + 50, (n_max * 12 + 9) / 10);
}

std::shared_ptr<const CollocationSolver> shared_solver(int N, double height) {
    static std::mutex mtx;
    static std::map<std::pair<int, double>, std::shared_ptr<const CollocationSolver>> pool;
    double h = height < 0 ? 10.0 / N : height;
    std::lock_guard lk(mtx);
    auto& slot = pool[{N, h}];
    if (!slot) slot = std::make_shared<CollocationSolver>(N, h);
    return slot;
}

namespace {

// atilde_{n,nu} carries a factor ~ e^{2 pi sqrt(2n(nu+3/8))}; it only ever
// enters multiplied by e^{-2 pi sqrt(2x(nu+3/8))} with x > n, so the series
// route keeps every exponent non-positive and stays in double precision.
double damped_atilde_series(int n, long nu, double beta, long c_max) {
    double a = 2 * pi_d * std::sqrt(2.0 * n * (nu + 0.375));
    double sum = 0;
    for (long c = 1; c <= c_max; c += 2) {
        double e1 = a / c - beta, e2 = -a / c - beta;
        if (e1 < -745) break;
        double s = kloosterman_S_tilde(-n, nu, c).real();
        if (s == 0) continue;
        sum += s / std::sqrt(double(c)) * 0.5 * (std::exp(e1) - std::exp(e2));
    }
    return 2.0 / std::sqrt(double(n)) * sum;
}

// exact route for small n: big rationals, evaluated at enough bits to absorb
// the e^{a} swing before the e^{-beta} damping brings the term back to O(1)
double damped_atilde_exact(int n, long nu, double beta,
                           const std::vector<rational>& coeffs) {
    double a = 2 * pi_d * std::sqrt(2.0 * std::max(n, 1) * (nu + 0.375));
    PrecisionGuard guard(unsigned(96 + a * 1.4427));
    mpreal t = to_real<mpreal>(coeffs[nu]) * exp(mpreal(-beta));
    return t.convert_to<double>();
}

}  // namespace

double laplace_quotient(int n, double x, int nu_max, double* err_out) {
    if (!(x > n)) throw std::invalid_argument("Laplace representation needs x > n");
    if (nu_max < 0) throw std::invalid_argument("negative truncation");
    bool exact = n <= 40 && nu_max <= 120;
    std::vector<rational> coeffs;
    if (exact) coeffs = g_cusp1_coefficients(n, nu_max + 1);
    double sum = 0;
    for (long nu = 0; nu <= nu_max; ++nu) {
        double beta = 2 * pi_d * std::sqrt(2.0 * x * (nu + 0.375));
        double da = exact ? damped_atilde_exact(n, nu, beta, coeffs)
                          : damped_atilde_series(n, nu, beta, 199);
        sum += da / std::sqrt(2.0 * (nu + 0.375));
    }
    if (err_out) {
        // first omitted term, with atilde taken at its leading size e^{a}/sqrt(n)
        double q = nu_max + 1 + 0.375;
        double ex = 2 * pi_d * std::sqrt(2.0 * q) * (std::sqrt(double(std::max(n, 1))) - std::sqrt(x));
        *err_out = std::exp(std::max(ex, -745.0)) / std::sqrt(std::max(n, 1) * 2.0 * q) +
                   1e-15 * std::fabs(sum);
    }
    return (n % 2 == 0 ? 1.0 : -1.0) * sum;
}

EvalResult eval_laplace(int n, double x, int nu_max) {
    double err;
    double q = laplace_quotient(n, x, nu_max, &err);
    double s = std::sin(pi_d * (x - n));
    return {n, {x, 0}, {q * s, 0}, "laplace", err * std::fabs(s) + 1e-300};
}

bool phi_approx_valid(int n, std::complex<double> z, double eps) {
    if (n < 1) return false;
    double rs = std::sqrt(z).real();
    return rs > (1.0 / 3 + eps) * std::sqrt(double(n));
}

std::complex<double> phi_approx_quotient(int n, std::complex<double> z, double* err) {
    std::complex<double> d = std::sqrt(z) - std::sqrt(std::complex<double>(n, 0));
    std::complex<double> v = phi(d) / std::sqrt(double(n));
    if (err) {
        double ex = pi_d * std::sqrt(3.0) *
                    (std::sqrt(double(n)) / 3 - std::sqrt(z).real());
        *err = 10 * std::exp(std::max(ex, -745.0));
    }
    return v;
}

EvalResult eval_phi_approx(int n, std::complex<double> z, double eps) {
    if (!phi_approx_valid(n, z, eps))
        throw std::domain_error("outside the validity region Re sqrt(z) > (1/3+eps) sqrt(n)");
    if (z == std::complex<double>(n, 0))
        throw std::domain_error("removable point z = n; evaluate the limit from nearby z");
    double err;
    std::complex<double> q = phi_approx_quotient(n, z, &err);
    std::complex<double> s = std::sin(pi_d * (z - double(n)));
    return {n, z, s * q, "phi_approx", err * std::abs(s) + 1e-300};
}

namespace {

double h_from_solver(int n, double x, const CollocationSolver& s);

double h_dispatch(int n, double x, const CollocationSolver* solver) {
    // Phi form only where its error term e^{pi sqrt3 (sqrt n/3 - sqrt x)} is
    // far below the quotient's working tolerance
    if (n >= 1 && x > 0 &&
        std::sqrt(x) > std::sqrt(double(n)) / 3 + 4.2 && x != double(n)) {
        return phi_approx_quotient(n, {x, 0}).real();
    }
    if (x > n + 0.25) {
        double delta = std::sqrt(x) - std::sqrt(double(std::max(n, 1)));
        double d = std::max(delta, 0.05);
        long nu_max = long(std::pow(28.0 / (2 * pi_d * std::sqrt(2.0) * d), 2)) + 8;
        if (nu_max > 400) nu_max = 400;
        return laplace_quotient(n, x, int(nu_max));
    }
    if (solver) return h_from_solver(n, x, *solver);
    auto s = shared_solver(solver_size_for(n));
    return h_from_solver(n, x, *s);
}

double h_from_solver(int n, double x, const CollocationSolver& s) {
    double m = std::round(x);
    if (std::fabs(x - m) < 1e-3 && m != double(n)) {
        // removable zero of the sin factor: cubic interpolation across it
        double xs[4] = {m - 0.2, m - 0.1, m + 0.1, m + 0.2};
        double ys[4];
        for (int i = 0; i < 4; ++i)
            ys[i] = s.eval(xs[i])[n] / std::sin(pi_d * (xs[i] - n));
        double acc = 0;
        for (int i = 0; i < 4; ++i) {
            double li = ys[i];
            for (int j = 0; j < 4; ++j)
                if (j != i) li *= (x - xs[j]) / (xs[i] - xs[j]);
            acc += li;
        }
        return acc;
    }
    return s.eval(x)[n] / std::sin(pi_d * (x - n));
}

}  // namespace

double h_quotient(int n, double x, const CollocationSolver* solver) {
    if (n < 0) throw std::invalid_argument("negative index");
    return h_dispatch(n, x, solver);
}

double solver_quotient(int n, double x, const CollocationSolver& solver) {
    if (n < 0 || n > solver.size()) throw std::invalid_argument("index outside the solver range");
    return h_from_solver(n, x, solver);
}

std::complex<double> generating_F(std::complex<double> tau, double x, int n_terms,
                                  double& feq_residual) {
    if (!(tau.imag() > 0)) throw std::invalid_argument("tau must be in the upper half plane");
    if (std::exp(-pi_d * n_terms * tau.imag()) >= 1e-20)
        throw std::invalid_argument("Im tau too small for the requested truncation");
    auto s = shared_solver(solver_size_for(n_terms));
    std::vector<double> f = s->eval(x);
    std::complex<double> ipi(0, pi_d);
    std::complex<double> taui = -1.0 / tau;
    std::complex<double> F1 = 0, F2 = 0;
    for (int n = n_terms; n >= 0; --n) {
        F1 += f[n] * std::exp(ipi * double(n) * tau);
        F2 += f[n] * std::exp(ipi * double(n) * taui);
    }
    std::complex<double> rt = inv_sqrt_tau_i(tau);
    std::complex<double> rhs = std::exp(ipi * x * tau) + rt * std::exp(-ipi * x / tau);
    feq_residual = std::abs(F1 + rt * F2 - rhs);
    return F1;
}

}  // namespace sqrtlat
