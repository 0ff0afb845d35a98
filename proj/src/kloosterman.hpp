#pragma once

#include "reduction.hpp"

#include <complex>

namespace sqrtlat {

// Kronecker symbol (a/n), defined for all integers with the standard
// extensions to n <= 0 and even n.
int kronecker(long long a, long long n);

// Weight-1/2 theta multiplier of a group element.
std::complex<double> nu_theta(const GroupElement& g);

// Exponential sum over residues mod 2c attached to the infinite cusp.
std::complex<double> kloosterman_S(long long m, long long n, long long c);

// Cusp-pair sum, defined for odd c only; the index n enters through n + 3/8.
std::complex<double> kloosterman_S_tilde(long long m, long long n, long long c);

struct SeriesValue {
    double value;
    double err;
};

// Truncated coefficient series a_{m,n} (sum over all c <= c_max).
SeriesValue rademacher_a(long long m, long long n, long long c_max);

// Truncated coefficient series for the cusp-1 coefficients (odd c <= c_max).
SeriesValue rademacher_a_tilde(long long m, long long n, long long c_max);

}  // namespace sqrtlat
