#pragma once

#include "num.hpp"
#include "reduction.hpp"
#include "series.hpp"

#include <stdexcept>

namespace sqrtlat {

template <class C>
typename cx_traits<C>::real_t eval_tol();

template <>
inline double eval_tol<std::complex<double>>() { return 1e-22; }

template <>
inline mpreal eval_tol<mpcomplex>() {
    return pow(mpreal(10), -long(mpreal::default_precision()) + 2);
}

// theta(tau) = sum e^{pi i n^2 tau}, summed directly; intended for tau in the
// fundamental domain where convergence is fast.
template <class C>
C theta_direct(const C& tau) {
    using R = typename cx_traits<C>::real_t;
    R tol = eval_tol<C>();
    R pi = cx_traits<C>::pi();
    C q = exp(cx_traits<C>::make(-pi * imag(tau), pi * real(tau)));  // e^{pi i tau}
    C sum = cx_traits<C>::make(R(1), R(0));
    C q2 = q * q;
    C term = q;       // q^{n^2}
    C odd = q * q2;   // q^{2n+1}
    for (int n = 1; n < 100000; ++n) {
        sum += term + term;
        if (abs(term) < tol * abs(sum)) break;
        term *= odd;
        odd *= q2;
    }
    return sum;
}

// theta_2(tau) = sum over half-integers, e^{pi i (k+1/2)^2 tau}.
template <class C>
C theta2_direct(const C& tau) {
    using R = typename cx_traits<C>::real_t;
    R tol = eval_tol<C>();
    R pi = cx_traits<C>::pi();
    C q = exp(cx_traits<C>::make(-pi * imag(tau), pi * real(tau)));
    C q2 = q * q;
    C sum = cx_traits<C>::make(R(0), R(0));
    C term = cx_traits<C>::make(R(1), R(0));  // q^{k(k+1)}
    C even = q2;                              // q^{2k+2}
    for (int k = 0; k < 100000; ++k) {
        sum += term;
        if (abs(term) < tol * abs(sum)) break;
        term *= even;
        even *= q2;
    }
    R quarter = pi / 4;
    C root = exp(cx_traits<C>::make(-quarter * imag(tau), quarter * real(tau)));  // e^{pi i tau/4}
    return (root * sum) + (root * sum);
}

template <class C>
struct ReducedEval {
    Reduction<C> red;
    C factor;  // product of (tau/i)^{-1/2} over the inversion steps
};

// Reduction that also accumulates the half-integral-weight automorphy factor
// needed to carry theta values back from the fundamental domain.
template <class C>
ReducedEval<C> reduce_with_factor(const C& tau) {
    using std::ceil;
    using R = typename cx_traits<C>::real_t;
    if (!(imag(tau) > 0)) throw std::invalid_argument("point not in the upper half-plane");

    ReducedEval<C> out;
    out.factor = cx_traits<C>::make(R(1), R(0));
    out.red.reduced = tau;
    for (int iter = 0; iter < 100000; ++iter) {
        R re = real(out.red.reduced);
        R kr = ceil((re - 1) / 2);
        long long k = (long long)cx_traits<C>::to_d(kr);
        if (k != 0) {
            out.red.reduced = out.red.reduced - C(double(2 * k), 0.0);
            out.red.gamma = GroupElement::T2(-k) * out.red.gamma;
        }
        R n = norm(out.red.reduced);
        bool inside = n > 1;
        bool on_circle = !inside && n >= R(1) - R(1e-15);
        if (inside || (on_circle && !(real(out.red.reduced) < 0))) break;
        // theta(tau_c) = (tau_c/i)^{-1/2} theta(-1/tau_c)
        C over_i = cx_traits<C>::make(imag(out.red.reduced), -real(out.red.reduced));
        out.factor = out.factor / sqrt(over_i);
        out.red.reduced = -conj(out.red.reduced) / n;
        out.red.gamma = GroupElement::S() * out.red.gamma;
        ++out.red.inversions;
    }
    return out;
}

template <class C>
C theta_eval(const C& tau) {
    ReducedEval<C> r = reduce_with_factor(tau);
    return r.factor * theta_direct(r.red.reduced);
}

template <class C>
struct LambdaJ {
    C lambda, J;
};

// lambda = theta_2^4 / theta^4 evaluated after reduction; a reduction with an
// odd number of inversions flips lambda to 1 - lambda. J = 16/(lambda(1-lambda))
// is invariant and is computed from the reduced point.
template <class C>
LambdaJ<C> lambda_j_eval(const C& tau) {
    using R = typename cx_traits<C>::real_t;
    Reduction<C> red = reduce_point(tau);
    C t = theta_direct(red.reduced);
    C t2 = theta2_direct(red.reduced);
    C ratio = t2 / t;
    C r2 = ratio * ratio;
    C lam = r2 * r2;
    C one = cx_traits<C>::make(R(1), R(0));
    LambdaJ<C> out;
    out.J = cx_traits<C>::make(R(16), R(0)) / (lam * (one - lam));
    out.lambda = (red.inversions % 2 == 0) ? lam : one - lam;
    return out;
}

template <class C>
C kernel_eval(const C& tau, const C& z) {
    using R = typename cx_traits<C>::real_t;
    LambdaJ<C> lt = lambda_j_eval(tau);
    LambdaJ<C> lz = lambda_j_eval(z);
    C diff = lt.J - lz.J;
    if (abs(diff) < (abs(lt.J) + abs(lz.J)) * 1e-12)
        throw std::domain_error("kernel pole: equivalent points");
    C tz = theta_eval(z);
    C one = cx_traits<C>::make(R(1), R(0));
    C two = cx_traits<C>::make(R(2), R(0));
    return tz * tz * tz * theta_eval(tau) * (one - two * lt.lambda) * lt.J / diff;
}

// Exact q-expansions, memoized per order.
struct BasicExpansions {
    HalfIntSeries theta, theta2, lambda, J;
};

const BasicExpansions& q_expansions(long order);

}  // namespace sqrtlat
