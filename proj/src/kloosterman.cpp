#include "kloosterman.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sqrtlat {

namespace {

const double pi = 3.14159265358979323846;

std::complex<double> unit(double turns) {
    return {std::cos(2 * pi * turns), std::sin(2 * pi * turns)};
}

// epsilon_d for odd d: 1 when d = 1 mod 4, i when d = 3 mod 4
std::complex<double> eps(long long d) {
    long long r = ((d % 4) + 4) % 4;
    if (r == 1) return {1, 0};
    if (r == 3) return {0, 1};
    return {0, 0};  // even d never occurs for valid residues
}

long long mod_inverse(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1) {
        long long q = g / a1;
        g -= q * a1;
        std::swap(g, a1);
        x -= q * x1;
        std::swap(x, x1);
    }
    if (g != 1) return -1;
    return ((x % m) + m) % m;
}

// extended gcd: returns g and x, y with ax + by = g
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos) {
        if (a % 2 == 0) return 0;
        long long r = ((a % 8) + 8) % 8;
        int k2 = (r == 1 || r == 7) ? 1 : -1;  // (2/a)
        if (twos % 2 == 1) sign *= k2;
    }
    // Jacobi symbol (a/n) for odd n > 0 by reciprocity
    a = ((a % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

std::complex<double> nu_theta(const GroupElement& g) {
    if (!g.in_theta_group()) throw std::invalid_argument("matrix not in the theta group");
    if (g.c == 0) {
        // +-T^{2k}
        return g.d > 0 ? std::complex<double>(1, 0) : std::complex<double>(0, -1);
    }
    if (g.c < 0) {
        GroupElement neg{-g.a, -g.b, -g.c, -g.d};
        return std::complex<double>(0, 1) * nu_theta(neg);
    }
    if (g.c % 2 == 0) {
        return std::conj(eps(g.d)) * double(kronecker(2 * g.c, g.d));
    }
    return unit(-1.0 / 8) * eps(g.c) * double(kronecker(2 * g.d, g.c));
}

std::complex<double> kloosterman_S(long long m, long long n, long long c) {
    if (c < 1) throw std::invalid_argument("modulus must be positive");
    std::complex<double> sum = 0;
    long long cc = 2 * c;
    if (c % 2 == 0) {
        for (long long d = 1; d < cc; d += 2) {
            long long a = mod_inverse(d, cc);
            if (a < 0) continue;
            long long r = (((m % cc) * a + (n % cc) * d) % cc + cc) % cc;
            sum += std::conj(eps(d)) * double(kronecker(cc, d)) * unit(double(r) / double(cc));
        }
    } else {
        // both residues even, inverses mod c
        std::complex<double> front = unit(3.0 / 8) * eps(c);
        for (long long e = 0; e < c; ++e) {
            long long d = 2 * e;
            if (std::gcd(d % c, c) != 1 && c != 1) continue;
            if (c == 1 && e != 0) break;
            long long ainv = c == 1 ? 0 : mod_inverse(d % c, c);
            // even representative of the inverse mod 2c
            long long a = (ainv % 2 == 0) ? ainv : ainv + c;
            long long r = (((m % cc) * (a % cc) + (n % cc) * d) % cc + cc) % cc;
            sum += front * double(kronecker(2 * d, c)) * unit(double(r) / double(cc));
        }
    }
    return sum;
}

std::complex<double> kloosterman_S_tilde(long long m, long long n, long long c) {
    if (c < 1 || c % 2 == 0) throw std::invalid_argument("modulus must be positive odd");
    std::complex<double> sum = 0;
    for (long long dd = 1; dd <= c; ++dd) {
        if (std::gcd(dd, c) != 1) continue;
        long long D = dd % c;
        long long ainv = c == 1 ? 0 : mod_inverse(D, c);
        long long A = (ainv % 2 == 1) ? ainv : ainv + c;  // odd representative mod 2c
        // matrix with bottom row (-D, c + D); top row from the determinant
        // condition a(c+D) + bD = 1 with the parity fixed by the group
        long long x, y;
        ext_gcd(c + D, D == 0 ? 1 : D, x, y);
        long long a, b;
        if (D == 0) {
            a = 1;
            b = 0;
        } else {
            // general solution (x + tD, y - t(c+D))
            a = x;
            b = y;
            if (D % 2 == 0) {
                if (b % 2 != 0) {
                    a += D;
                    b -= c + D;
                }
            } else {
                if (a % 2 != 0) {
                    a += D;
                    b -= c + D;
                }
            }
        }
        GroupElement gamma{a, b, -D, c + D};
        std::complex<double> nu = nu_theta(gamma);
        std::complex<double> nu3 = nu * nu * nu;
        long long r = ((4 * (m % (8 * c)) * (A % (8 * c)) + 8 * (n % c) * D + 3 * D) % (8 * c) + 8 * c) % (8 * c);
        sum += std::conj(nu3) * unit(double(r) / double(8 * c));
    }
    return sum;
}

namespace {

SeriesValue rademacher_sum(long long m, long long n, long long c_max, bool tilde) {
    if (m < 1 || c_max < 1) throw std::invalid_argument("invalid series parameters");
    if (!tilde && n < 1) throw std::invalid_argument("index must be positive");
    if (tilde && n < 0) throw std::invalid_argument("index must be non-negative");
    double arg0 = tilde ? 2 * pi * std::sqrt(2.0 * m * (n + 3.0 / 8)) : 2 * pi * std::sqrt(double(m) * n);
    std::complex<double> front = tilde ? std::complex<double>(2 / std::sqrt(double(m)), 0)
                                       : unit(-3.0 / 8) / std::sqrt(double(m));
    std::complex<double> sum = 0;
    std::complex<double> block = 0;  // contribution of the last dyadic range
    for (long long c = 1; c <= c_max; c += tilde ? 2 : 1) {
        std::complex<double> Sv = tilde ? kloosterman_S_tilde(-m, n, c) : kloosterman_S(-m, n, c);
        std::complex<double> term = Sv / std::sqrt(double(c)) * std::sinh(arg0 / c);
        sum += term;
        if (2 * c > c_max) block += term;
    }
    sum *= front;
    block *= front;
    SeriesValue out;
    out.value = sum.real();
    out.err = 4 * std::abs(block) + std::abs(sum.imag());
    return out;
}

}  // namespace

SeriesValue rademacher_a(long long m, long long n, long long c_max) {
    return rademacher_sum(m, n, c_max, false);
}

SeriesValue rademacher_a_tilde(long long m, long long n, long long c_max) {
    return rademacher_sum(m, n, c_max, true);
}

}  // namespace sqrtlat
