#pragma once

#include "modular.hpp"
#include "series.hpp"

#include <vector>

namespace sqrtlat {

// Coefficients of the degree-n polynomial Q_n with g_n = theta^3 Q_n(J),
// index j = power of J. Integer-valued; solved exactly and cached.
const std::vector<rational>& q_poly(int n);

// q-expansion of g_n to the given truncation order (order in 1/8 exponent
// units). The leading term is q^{-n/2}.
HalfIntSeries g_expansion(int n, long order);

// Coefficients of the expansion of g_m at the cusp 1: entries nu = 0..count-1
// multiply q^{nu+3/8}.
std::vector<rational> g_cusp1_coefficients(int m, int count);

// Q_n(J). The Horner pass runs at widened precision: the coefficients grow
// like e^{2 pi n} and near J = 64 the intermediate terms reach e^{(2pi+log 64)n}
// while the value cancels down to ~e^{pi n}, so a plain evaluation at working
// precision loses ~15n bits.
mpcomplex q_poly_value(int n, const mpcomplex& J);
std::complex<double> q_poly_value(int n, std::complex<double> J);

// Pointwise g_n(tau) = theta^3(tau) Q_n(J(tau)).
template <class C>
C g_eval(int n, const C& tau) {
    LambdaJ<C> lj = lambda_j_eval(tau);
    C acc = q_poly_value(n, lj.J);
    C th = theta_eval(tau);
    return th * th * th * acc;
}

}  // namespace sqrtlat
