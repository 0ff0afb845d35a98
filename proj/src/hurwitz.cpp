#include "hurwitz.hpp"

#include "series.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace sqrtlat {

namespace {

// Exact Bernoulli numbers B_0, B_1, B_2, ... via the defining recurrence.
const rational& bernoulli(size_t m) {
    static std::mutex mtx;
    static std::vector<rational> table{1, rational(-1, 2)};
    std::lock_guard lk(mtx);
    while (table.size() <= m) {
        size_t n = table.size();
        // sum_{k=0}^{n} C(n+1, k) B_k = 0
        rational sum = 0;
        rational binom = 1;  // C(n+1, k)
        for (size_t k = 0; k < n; ++k) {
            sum += binom * table[k];
            binom = binom * rational(long(n) + 1 - long(k)) / rational(long(k) + 1);
        }
        table.push_back(-sum / binom);
    }
    return table[m];
}

// zeta(1-s, a) = Gamma(s)/(2 pi)^s (e^{-pi i s/2} sum_n e^{2 pi i n a} n^{-s} + c.c.)
// (Hurwitz's formula). For very negative arguments the Dirichlet series
// needs only a few terms and there is no cancellation, unlike Euler-Maclaurin
// whose working precision grows with |s|.
mpreal hurwitz_reflected(double s, double a) {
    unsigned out_digits = mpreal::default_precision();
    PrecisionGuard guard(unsigned((out_digits + 12) / 0.30103) + 8);
    mpreal sh(1 - s);  // large positive
    mpreal pi = mp_pi();
    mpreal two_pi_a = 2 * pi * mpreal(a);
    mpcomplex z8(cos(two_pi_a), sin(two_pi_a));
    mpcomplex zn(1);
    mpcomplex sum(0);
    mpreal tol = pow(mpreal(10), -long(out_digits) - 10);
    for (long n = 1; n < 2000000; ++n) {
        zn *= z8;
        mpreal p = pow(mpreal(n), -sh);
        sum += p * zn;
        if (p < tol) break;
    }
    mpreal half_arg = pi * sh / 2;
    mpcomplex rot(cos(half_arg), -sin(half_arg));
    mpreal result = 2 * real(rot * sum) * tgamma(sh) * pow(2 * pi, -sh);
    return mpreal(result, mpreal::default_precision());
}

}  // namespace

mpreal hurwitz_zeta(double s, double a) {
    if (!(s <= 0.5)) throw std::invalid_argument("exponent above 1/2");
    if (!(a > 0 && a < 1)) throw std::invalid_argument("shift outside (0,1)");

    unsigned out_digits = mpreal::default_precision();
    if (s < -28) return hurwitz_reflected(s, a);
    long N = std::max(50L, long(std::fabs(s) * 1.2) + 20);
    // the direct block reaches ~N^{|s|} while the result can be much smaller
    double extra_bits = std::fabs(s) * std::log2(double(N) + 1) + 96;
    unsigned work_digits = out_digits + unsigned(extra_bits * 0.30103) + 8;

    mpreal result;
    {
        PrecisionGuard guard(unsigned(work_digits / 0.30103) + 8);
        mpreal ss(s), aa(a);
        mpreal sum = 0;
        for (long k = 0; k < N; ++k) sum += pow(mpreal(k) + aa, -ss);
        mpreal Na = mpreal(N) + aa;
        sum += pow(Na, 1 - ss) / (ss - 1);
        sum += pow(Na, -ss) / 2;

        // Euler-Maclaurin corrections: B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}
        mpreal poch = ss;              // rising factorial, 2j-1 factors
        mpreal power = pow(Na, -ss - 1);
        mpreal fact = 2;               // (2j)!
        // the cutoff must track the partial sum as it cancels down toward the
        // result (the pre-correction sum can exceed it by N^{|s|}), so it is
        // re-derived from the current magnitude every step
        mpreal eps = pow(mpreal(10), -long(out_digits) - 6);
        mpreal prev = 0;
        long j_cap = 4 * long(std::fabs(s)) + 80;
        for (long j = 1; j <= j_cap; ++j) {
            mpreal b2j = to_real<mpreal>(bernoulli(2 * j));
            mpreal term = b2j / fact * poch * power;
            sum += term;
            mpreal mag = abs(term);
            if (mag < eps * (abs(sum) + 1)) break;
            if (j > 4 && prev != 0 && mag > prev) break;  // asymptotic tail started growing
            prev = mag;
            poch *= (ss + 2 * j - 1) * (ss + 2 * j);
            power /= Na * Na;
            fact *= (2 * j + 1) * (2 * j + 2);
        }
        result = sum;
    }
    return mpreal(result, mpreal::default_precision());
}

}  // namespace sqrtlat
