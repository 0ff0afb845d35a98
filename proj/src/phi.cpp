#include "phi.hpp"

#include "hurwitz.hpp"
#include "modular.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace sqrtlat {

namespace {

const double pi_d = 3.14159265358979323846;

unsigned gamma_store_digits(size_t k) {
    return unsigned(64 + 0.45 * k) + 8;  // digits; terms matter while k ~ 2 pi |z|^2
}

}  // namespace

const mpreal& phi_taylor_gamma(size_t k) {
    static std::shared_mutex mtx;
    static std::vector<mpreal> table;
    {
        std::shared_lock lk(mtx);
        if (k < table.size()) return table[k];
    }
    std::unique_lock lk(mtx);
    while (table.size() <= k) {
        size_t j = table.size();
        PrecisionGuard guard(unsigned(gamma_store_digits(j) / 0.30103) + 16);
        mpreal z = hurwitz_zeta((1.0 - double(j)) / 2, 3.0 / 8);
        mpreal g = pow(sqrt(mpreal(2)), double(j) - 1) * z;
        table.push_back(g);
    }
    return table[k];
}

namespace {

// Laplace-type series, valid for Re z > 0; fast for Re z >= 1/4.
std::complex<double> phi_direct(std::complex<double> z) {
    std::complex<double> sum = 0;
    for (long nu = 0; nu < 2000000; ++nu) {
        double c = std::sqrt(2 * (nu + 0.375));
        std::complex<double> t = std::exp(-2 * pi_d * z * c) / c;
        sum += t;
        if (std::abs(t) < 1e-22 * (std::abs(sum) + 1e-280)) break;
    }
    return sum;
}

std::complex<double> phi_taylor(std::complex<double> z) {
    double r2 = std::norm(z);
    unsigned bits = 192 + unsigned(9.1 * r2);
    PrecisionGuard guard(bits);
    mpreal pi_mp = cx_traits<mpcomplex>::pi();
    mpcomplex zz(z);
    mpcomplex sum = mpcomplex(1.0) / (2 * pi_mp * zz);
    mpcomplex w = mpreal(-2) * pi_mp * zz;
    mpcomplex pw(1.0);  // w^k / k!
    mpreal tol = pow(mpreal(10), -30);
    int small_run = 0;
    for (size_t k = 0; k < 5000; ++k) {
        mpcomplex term = phi_taylor_gamma(k) * pw;
        sum += term;
        if (abs(term) < tol * (abs(sum) + 1)) {
            if (++small_run >= 8) break;
        } else {
            small_run = 0;
        }
        pw = pw * w / mpreal(double(k + 1));
    }
    return sum.to_double();
}

// Terms of the one-sided sum: e^{s i pi((3n-1)/4 - w/n)}/sqrt(n). Writing
// them as e^{-s i pi/4} omega^n f(n) with omega = e^{s 3 pi i/4} and
// f(n) = e^{-s i pi w/n}/sqrt(n), the remainder from N on is handled by
// iterated summation by parts (f varies slowly once n exceeds ~|w|).
template <class C>
C theta_tail(const C& w, int s, long N) {
    using R = typename cx_traits<C>::real_t;
    R pi = cx_traits<C>::pi();
    C i_pi_s = cx_traits<C>::make(R(0), s > 0 ? pi : -pi);
    const int K = 14;
    C f[K + 1];
    for (int j = 0; j <= K; ++j) {
        long n = N + j;
        C ph = (-i_pi_s) * (w / R(double(n)));
        f[j] = exp(ph) / sqrt(R(double(n)));
    }
    for (int k = 1; k <= K; ++k)  // forward differences in place
        for (int j = K; j >= k; --j) f[j] = f[j] - f[j - 1];
    R three4 = R(3) / 4;
    C omega = exp(cx_traits<C>::make(R(0), (s > 0 ? pi : -pi) * three4));
    C one = cx_traits<C>::make(R(1), R(0));
    C inv1mo = one / (one - omega);
    // omega has period 8 in n
    C wN = exp(cx_traits<C>::make(R(0), (s > 0 ? pi : -pi) * three4 * R(double(N % 8))));
    C pref = inv1mo;
    C tail = cx_traits<C>::make(R(0), R(0));
    for (int k = 0; k <= K; ++k) {
        tail += pref * wN * f[k];
        pref *= inv1mo;
        wN *= omega;
    }
    C rot = exp(cx_traits<C>::make(R(0), (s > 0 ? -pi : pi) / 4));
    return rot * tail;
}

template <class C>
C theta_side(const C& w, int s, long y) {
    using R = typename cx_traits<C>::real_t;
    R pi = cx_traits<C>::pi();
    C i_pi_s = cx_traits<C>::make(R(0), s > 0 ? pi : -pi);
    C sum = cx_traits<C>::make(R(0), R(0));
    for (long n = 1; n <= y; ++n) {
        C ph = i_pi_s * (C(double(3 * n - 1) / 4, 0.0) - w / R(double(n)));
        sum += exp(ph) / sqrt(R(double(n)));
    }
    return sum + theta_tail(w, s, y + 1);
}

long direct_cut(double size) {
    long y = long(4 * size) + 1;
    return y < 16 ? 16 : y;
}

}  // namespace

std::complex<double> psi_complex(std::complex<double> w) {
    double iw = std::fabs(w.imag());
    long y = direct_cut(std::abs(w));
    // the two theta sides reach e^{pi |Im w|} individually and cancel, so the
    // double path runs out of headroom well before overflow does
    if (iw <= 2) {
        return theta_side<std::complex<double>>(w, +1, y) +
               theta_side<std::complex<double>>(w, -1, y);
    }
    PrecisionGuard guard(unsigned(128 + 4.6 * iw));
    mpcomplex wm(w);
    mpcomplex r = theta_side<mpcomplex>(wm, +1, y) + theta_side<mpcomplex>(wm, -1, y);
    return r.to_double();
}

double psi(double x) {
    if (std::fabs(x) < 1) {
        std::complex<double> r = std::sqrt(std::complex<double>(x, 0));
        if (r.real() == 0 && r.imag() == 0) return psi_complex(0).real();
        return (phi(r) + phi(-r)).real();
    }
    long y = direct_cut(std::fabs(x));
    double direct = 0;
    for (long n = 1; n <= y; ++n) {
        double ph = pi_d * ((3.0 * n - 1) / 4 - x / n);
        direct += 2 * std::cos(ph) / std::sqrt(double(n));
    }
    return direct + 2 * theta_tail<std::complex<double>>({x, 0}, +1, y + 1).real();
}

void theta_sum(double x, double y_cut, std::complex<double>& partial,
               std::complex<double>& tail) {
    long y = long(y_cut);
    if (y < 1) y = 1;
    std::complex<double> direct = 0;
    for (long n = 1; n <= y; ++n) {
        double ph = pi_d * ((3.0 * n - 1) / 4 - x / n);
        direct += std::complex<double>(std::cos(ph), std::sin(ph)) / std::sqrt(double(n));
    }
    partial = direct;
    tail = theta_tail<std::complex<double>>({x, 0}, +1, y + 1);
}

std::complex<double> phi(std::complex<double> z) {
    double r = std::abs(z);
    if (r == 0) throw std::domain_error("pole at zero");
    if (z.real() >= 0.25) {
        if (r > 6) return phi_direct(z);
        return phi_taylor(z);
    }
    if (r <= 6) return phi_taylor(z);
    if (z.real() <= -0.25) {
        return psi_complex(z * z) - phi_direct(-z);
    }
    // narrow strip beyond the disc: the Taylor route still converges, at a
    // higher working precision
    if (r <= 14) return phi_taylor(z);
    throw std::domain_error("argument outside the supported regions");
}

double psi_moment(double T) {
    if (!(T > 1)) throw std::invalid_argument("range start too small");
    static const double gx[4] = {0.06943184420297371, 0.33000947820757187,
                                 0.66999052179242813, 0.93056815579702629};
    static const double gw[4] = {0.17392742256872693, 0.32607257743127307,
                                 0.32607257743127307, 0.17392742256872693};
    double sum = 0;
    long panels = long(T + 0.5);
    double h = T / double(panels);
    for (long p = 0; p < panels; ++p) {
        double x0 = T + p * h;
        for (int q = 0; q < 4; ++q) {
            double v = psi(x0 + gx[q] * h);
            sum += gw[q] * h * v * v;
        }
    }
    return sum / (T * std::log(T));
}

}  // namespace sqrtlat
