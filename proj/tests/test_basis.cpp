#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "basis.hpp"
#include "contour.hpp"

#include <cmath>
#include <complex>

using namespace sqrtlat;
using Cd = std::complex<double>;

TEST_CASE("collocation system is well conditioned") {
    CollocationSolver sol(64);
    CHECK(sol.cond_estimate() < 1e9);
    CHECK(sol.trusted() >= 10);
    CHECK(solver_size_for(10) <= 64);
}

TEST_CASE("delta property at integer points") {
    CollocationSolver sol(64);
    double worst = 0;
    for (int m = 0; m <= 20; ++m) {
        std::vector<double> f = sol.eval(double(m));
        for (int n = 0; n <= 20; ++n)
            worst = std::max(worst, std::fabs(f[n] - (m == n ? 1.0 : 0.0)));
    }
    CHECK(worst < 1e-8);  // observed 4e-12
}

TEST_CASE("frozen solver values") {
    CollocationSolver sol(64);
    double err;
    std::vector<double> f = sol.eval(0.55, &err);
    CHECK(std::fabs(f[3] - (-0.047101512292232882)) < 1e-9);
    CHECK(err < 1e-2);
    CHECK(std::fabs(sol.eval(1.95)[3] - (-0.0012700948153969139)) < 1e-9);
    std::vector<double> g = sol.eval(2.5);
    CHECK(std::fabs(g[3] - 0.60601381217351113) < 1e-9);
    CHECK(std::fabs(g[5] - (-0.51133018232533556)) < 1e-9);
}

TEST_CASE("contour quadrature agrees with the solver") {
    CollocationSolver sol(64);
    for (double x : {0.55, 1.3, 2.5}) {
        ContourResult r = eval_contour(3, Cd(x, 0));
        CHECK(r.converged);
        CHECK(r.err < 1e-9);
        CHECK(std::fabs(r.value.real() - sol.eval(x)[3]) < 1e-7);
        CHECK(std::fabs(r.value.imag()) < 1e-9);
    }
    // frozen high-accuracy value
    ContourResult r = eval_contour(3, Cd(0.55, 0));
    CHECK(std::fabs(r.value.real() - (-0.047101512292237607)) < 1e-11);
}

TEST_CASE("laplace series and phi form agree for x well beyond n") {
    double err;
    EvalResult l = eval_laplace(10, 30.5, 120);
    CHECK(std::fabs(l.value.real() - 9.6481391229075562e-07) < 1e-17);
    EvalResult p = eval_phi_approx(10, Cd(30.5, 0));
    CHECK(std::fabs(p.value.real() - l.value.real()) < 1e-11);
    CHECK(p.err < 1e-8);
    double lq = laplace_quotient(10, 30.5, 120, &err);
    // sin(pi(30.5-10)) = 1, so the quotient equals the value here
    CHECK(std::fabs(lq - l.value.real()) < 1e-18);
}

TEST_CASE("quotient routes cross-check") {
    CollocationSolver sol(64);
    double sq = solver_quotient(10, 30.5, sol);
    CHECK(std::fabs(sq - 9.6481391229075562e-07) < 1e-11);
    double hq = h_quotient(10, 30.5, &sol);
    CHECK(std::fabs(hq - sq) < 1e-11);
    // h is smooth through integer x (removable singularity of the quotient)
    double a = h_quotient(10, 13.0 - 1e-6, &sol);
    double b = h_quotient(10, 13.0, &sol);
    double c = h_quotient(10, 13.0 + 1e-6, &sol);
    CHECK(std::fabs(a - b) < 1e-4 * (1 + std::fabs(b)));
    CHECK(std::fabs(c - b) < 1e-4 * (1 + std::fabs(b)));
}

TEST_CASE("phi form validity predicate") {
    CHECK(phi_approx_valid(10, Cd(30.5, 0)));
    CHECK(!phi_approx_valid(400, Cd(5.0, 0)));
}

TEST_CASE("generating function satisfies its functional equation") {
    double res;
    Cd F = generating_F(Cd(0.3, 1.2), 1.5, 40, res);
    CHECK(std::abs(F - Cd(-0.0057433750394617396, 0.0087973593658792794)) < 1e-12);
    CHECK(res < 1e-12);
    generating_F(Cd(-0.4, 0.9), 0.7, 50, res);
    CHECK(res < 1e-10);
}

TEST_CASE("shared solver pool returns one instance") {
    auto a = shared_solver(48);
    auto b = shared_solver(48);
    CHECK(a.get() == b.get());
    auto c = shared_solver(48, 0.3);
    CHECK(a.get() != c.get());
}
