#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <complex>
#include <cmath>

namespace sqrtlat {

// unqualified math calls on double/std::complex must keep working alongside
// the overloads for the multiprecision types below
using std::abs;
using std::arg;
using std::atan2;
using std::ceil;
using std::conj;
using std::cos;
using std::exp;
using std::floor;
using std::imag;
using std::log;
using std::norm;
using std::pow;
using std::real;
using std::sin;
using std::sqrt;

using mpreal = boost::multiprecision::mpfr_float;

/// Scoped override of the working precision (in bits) for mpreal temporaries.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(mpreal::default_precision()) {
        mpreal::default_precision(bits_to_digits(bits));
    }
    ~PrecisionGuard() { mpreal::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

    static unsigned bits_to_digits(unsigned bits) {
        return static_cast<unsigned>(bits * 0.30103) + 4;
    }

private:
    unsigned saved_;
};

// Minimal complex type over mpreal. std::complex is not usable with
// non-trivial value types, so the handful of operations the evaluators
// need are spelled out here.
struct mpcomplex {
    mpreal re, im;

    mpcomplex() : re(0), im(0) {}
    mpcomplex(const mpreal& r) : re(r), im(0) {}
    mpcomplex(const mpreal& r, const mpreal& i) : re(r), im(i) {}
    mpcomplex(double r) : re(r), im(0) {}
    mpcomplex(double r, double i) : re(r), im(i) {}
    explicit mpcomplex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_double() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }

    mpcomplex& operator+=(const mpcomplex& o) { re += o.re; im += o.im; return *this; }
    mpcomplex& operator-=(const mpcomplex& o) { re -= o.re; im -= o.im; return *this; }
    mpcomplex& operator*=(const mpcomplex& o) {
        mpreal r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
};

inline mpcomplex operator+(mpcomplex a, const mpcomplex& b) { return a += b; }
inline mpcomplex operator-(mpcomplex a, const mpcomplex& b) { return a -= b; }
inline mpcomplex operator-(const mpcomplex& a) { return {-a.re, -a.im}; }
inline mpcomplex operator*(mpcomplex a, const mpcomplex& b) { return a *= b; }
inline mpcomplex operator*(const mpreal& s, mpcomplex a) { a.re *= s; a.im *= s; return a; }
inline mpcomplex operator/(const mpcomplex& a, const mpcomplex& b) {
    mpreal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline mpcomplex operator/(const mpcomplex& a, const mpreal& s) { return {a.re / s, a.im / s}; }

inline const mpreal& real(const mpcomplex& z) { return z.re; }
inline const mpreal& imag(const mpcomplex& z) { return z.im; }
inline mpcomplex conj(const mpcomplex& z) { return {z.re, -z.im}; }
inline mpreal norm(const mpcomplex& z) { return z.re * z.re + z.im * z.im; }
inline mpreal abs(const mpcomplex& z) { return sqrt(norm(z)); }
inline mpreal arg(const mpcomplex& z) { return atan2(z.im, z.re); }

inline mpcomplex exp(const mpcomplex& z) {
    mpreal m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

/// Principal square root, branch cut on the negative real axis, arg in (-pi, pi].
inline mpcomplex sqrt(const mpcomplex& z) {
    mpreal m = abs(z);
    if (m == 0) return {mpreal(0), mpreal(0)};
    mpreal r = sqrt((m + z.re) / 2);
    mpreal i = sqrt((m - z.re) / 2);
    if (z.im < 0) i = -i;
    return {r, i};
}

inline mpcomplex log(const mpcomplex& z) { return {log(abs(z)), arg(z)}; }

inline mpcomplex polar_mp(const mpreal& r, const mpreal& theta) {
    return {r * cos(theta), r * sin(theta)};
}

// Uniform accessors so evaluation code can be templated over
// std::complex<double> and mpcomplex.
template <class C> struct cx_traits;

template <> struct cx_traits<std::complex<double>> {
    using real_t = double;
    static double pi() { return 3.14159265358979323846; }
    static std::complex<double> make(double re, double im) { return {re, im}; }
    static double to_d(double x) { return x; }
};

inline mpreal mp_pi() {
    mpreal x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

template <> struct cx_traits<mpcomplex> {
    using real_t = mpreal;
    static mpreal pi() { return mp_pi(); }
    static mpcomplex make(const mpreal& re, const mpreal& im) { return {re, im}; }
    static double to_d(const mpreal& x) { return x.convert_to<double>(); }
};

}  // namespace sqrtlat
