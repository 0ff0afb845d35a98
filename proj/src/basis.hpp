#pragma once

#include "num.hpp"

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace sqrtlat {

struct EvalResult {
    int n;
    std::complex<double> x;
    std::complex<double> value;
    std::string method;
    double err;
};

// Factored collocation system for the functional equation
//   F(tau,x) + (tau/i)^{-1/2} F(-1/tau,x) = e^{pi i x tau} + (tau/i)^{-1/2} e^{-pi i x/tau}
// truncated to n <= N and enforced at N+1 equally spaced nodes on
// [-1 + i h, 1 + i h]. The matrix depends only on the nodes, so one
// factorization serves any number of abscissas x.
class CollocationSolver {
public:
    // height < 0 selects the default 10/N
    explicit CollocationSolver(int N, double height = -1.0);

    int size() const { return N_; }
    double height() const { return height_; }
    double cond_estimate() const { return cond_; }
    // largest n whose solved value is inside the refinement-validated range
    int trusted() const { return trusted_; }

    // f_n(x) for n = 0..N; err (if non-null) receives the largest imaginary
    // residual of the solve, a proxy for the solution error
    std::vector<double> eval(double x, double* err = nullptr) const;

    Eigen::VectorXcd solve_raw(std::complex<double> x) const;

private:
    int N_;
    double height_;
    double cond_;
    int trusted_;
    std::vector<double> colscale_;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
};

// smallest truncation size whose trusted range covers n_max
int solver_size_for(int n_max);

// process-wide solver pool keyed by (N, height)
std::shared_ptr<const CollocationSolver> shared_solver(int N, double height = -1.0);

// sin(pi x) * sum_{nu <= nu_max} atilde_{n,nu} e^{-2 pi sqrt(2x(nu+3/8))} / sqrt(2(nu+3/8))
EvalResult eval_laplace(int n, double x, int nu_max);

// the same sum without the sin factor: f_n(x)/sin(pi(x-n)) for x > n
double laplace_quotient(int n, double x, int nu_max, double* err = nullptr);

// sin(pi(z-n)) Phi(sqrt z - sqrt n)/sqrt n, valid for Re sqrt z > (1/3+eps) sqrt n
EvalResult eval_phi_approx(int n, std::complex<double> z, double eps = 0.05);

bool phi_approx_valid(int n, std::complex<double> z, double eps = 0.05);

// Phi(sqrt z - sqrt n)/sqrt n (the quotient form of the above)
std::complex<double> phi_approx_quotient(int n, std::complex<double> z, double* err = nullptr);

// f_n(x)/sin(pi(x-n)) by whichever route covers (n, x): the Phi form well
// inside its validity region, the Laplace sum for x > n, else a collocation
// solve with interpolation across the removable integer points.
double h_quotient(int n, double x, const CollocationSolver* solver = nullptr);

// the collocation route alone (interpolating across integer x), for
// cross-checking the series forms against an independent evaluation
double solver_quotient(int n, double x, const CollocationSolver& solver);

// partial generating function sum_{n<=n_terms} f_n(x) e^{pi i n tau} and the
// residual of the functional equation at tau
std::complex<double> generating_F(std::complex<double> tau, double x, int n_terms,
                                  double& feq_residual);

}  // namespace sqrtlat
