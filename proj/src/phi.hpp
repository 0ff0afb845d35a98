#pragma once

#include "num.hpp"

#include <complex>

namespace sqrtlat {

// Cached value of 2^{(k-1)/2} zeta((1-k)/2, 3/8), the k-th Taylor datum of
// the pole-free part of Phi.
const mpreal& phi_taylor_gamma(size_t k);

// Phi(z): the Laplace-type series for Re z >= 1/4, the Taylor expansion
// around 0 in a disc, and the reflection through the cosine-sum identity on
// the left half-plane.
std::complex<double> phi(std::complex<double> z);

// The cosine sum  sum_n 2 cos(pi((3n-1)/4 - w/n))/sqrt(n)  at complex w,
// evaluated by direct summation plus an accelerated tail.
std::complex<double> psi_complex(std::complex<double> w);

double psi(double x);

// One-sided exponential sum: partial sum over n <= y_cut and the accelerated
// remainder, reported separately.
void theta_sum(double x, double y_cut, std::complex<double>& partial,
               std::complex<double>& tail);

// (1/(T log T)) integral of Psi^2 over [T, 2T].
double psi_moment(double T);

}  // namespace sqrtlat
