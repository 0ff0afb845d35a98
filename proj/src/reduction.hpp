#pragma once

#include "num.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace sqrtlat {

// Element of the theta group (integer matrix, det 1, congruent to the
// identity or to the inversion S mod 2).
struct GroupElement {
    long long a = 1, b = 0, c = 0, d = 1;

    GroupElement() = default;
    GroupElement(long long a_, long long b_, long long c_, long long d_)
        : a(a_), b(b_), c(c_), d(d_) {}

    static GroupElement identity() { return {1, 0, 0, 1}; }
    static GroupElement S() { return {0, -1, 1, 0}; }
    static GroupElement T2(long long k) { return {1, 2 * k, 0, 1}; }

    GroupElement operator*(const GroupElement& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    GroupElement inverse() const { return {d, -b, -c, a}; }

    bool unimodular() const { return a * d - b * c == 1; }
    bool in_theta_group() const {
        if (!unimodular()) return false;
        bool ident = ((a & 1) && !(b & 1) && !(c & 1) && (d & 1));
        bool inv = (!(a & 1) && (b & 1) && (c & 1) && !(d & 1));
        return ident || inv;
    }

    template <class C>
    C apply(const C& tau) const {
        using R = typename cx_traits<C>::real_t;
        return (R(double(a)) * tau + C(double(b), 0.0)) /
               (R(double(c)) * tau + C(double(d), 0.0));
    }
};

template <class C>
struct Reduction {
    GroupElement gamma;  // maps the input point into the fundamental domain
    C reduced;
    int inversions = 0;
};

// Reduces tau into the closed fundamental domain |Re| <= 1, |tau| >= 1,
// normalizing Re to (-1, 1] and, on the unit circle, Re >= 0.
template <class C>
Reduction<C> reduce_point(const C& tau) {
    using std::ceil;
    using R = typename cx_traits<C>::real_t;
    if (!(imag(tau) > 0)) throw std::invalid_argument("point not in the upper half-plane");

    Reduction<C> red;
    red.reduced = tau;
    for (int iter = 0; iter < 100000; ++iter) {
        R re = real(red.reduced);
        // shift Re into (-1, 1]
        R kr = ceil((re - 1) / 2);
        long long k = (long long)cx_traits<C>::to_d(kr);
        if (k != 0) {
            red.reduced = red.reduced - C(double(2 * k), 0.0);
            red.gamma = GroupElement::T2(-k) * red.gamma;
        }
        R n = norm(red.reduced);
        bool inside = n > 1;
        bool on_circle = !inside && n >= R(1) - R(1e-15);
        if (inside || (on_circle && !(real(red.reduced) < 0))) break;
        red.reduced = -conj(red.reduced) / n;  // -1/tau
        red.gamma = GroupElement::S() * red.gamma;
        ++red.inversions;
    }
    return red;
}

}  // namespace sqrtlat
