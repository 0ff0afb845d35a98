#pragma once

#include "basis.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sqrtlat {

struct ZeroReport {
    int n;
    std::string kind;           // delta_window | rectangle | real_interval
    double a, b;                // window in the kind's own coordinate
    double y0, y1;              // imaginary extent for contour kinds
    long count;
    std::vector<double> real_zeros;
    long winding_samples;
    bool coverage_warning;
};

struct MomentResult {
    long index;                 // n (moment_fn) or xi (l2_sum)
    double a, b;
    double value;
    double err;
    long panels;
};

// sign-change scan of h_n = f_n / sin(pi (x - n)) with bisection refinement
ZeroReport real_zeros(int n, double a, double b, double grid_step);

// winding count of h_n over the boundary of the region whose w = (sqrt z - sqrt n)^2
// coordinate runs over t1 < Re w < t2, |Im w| < log n
ZeroReport count_zeros_delta(int n, double t1, double t2);

// winding count of f_n over 0 <= Re z <= r, |Im z| <= r (contour quadrature)
ZeroReport count_zeros_rectangle(int n, double r, int precision_bits = 0);

// integral of f_n^2 over [a, b], composite Gauss-Legendre on unit panels
MomentResult moment_fn(int n, double a, double b, const CollocationSolver* solver = nullptr);

// integrals of f_n^2 over [0, x_cut(n)] for many n off one factorization
std::vector<MomentResult> moment_profile(const std::vector<int>& ns,
                                         const std::function<double(int)>& x_cut);

// sum over n <= xi of the integral of f_n^2 over [0, x_cut]
MomentResult l2_sum(long xi, double x_cut);

// where the third-regime decay makes the tail of the squared integral negligible
double default_x_cut(int n);

// n^{1/4} f_n(x0) for n = 1..n_max, one factorization, one solve
std::vector<double> histogram_values(double x0, int n_max);

// max over the grid of |G_t(x) - sum_n G_t(sqrt n) f_n(x^2)| with
// G_t(x) = e^{-pi t x^2} + t^{-1/2} e^{-pi x^2/t}; n_trunc = 0 picks the
// truncation from the Gaussian tail
double verify_interpolation(double t, const std::vector<double>& x_grid, int n_trunc = 0);

}  // namespace sqrtlat
