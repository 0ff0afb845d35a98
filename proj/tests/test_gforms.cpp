#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gforms.hpp"

#include <complex>

using namespace sqrtlat;
using Cd = std::complex<double>;

TEST_CASE("Q polynomials") {
    const std::vector<rational>& q0 = q_poly(0);
    REQUIRE(q0.size() == 1);
    CHECK(q0[0] == 1);

    const std::vector<rational>& q2 = q_poly(2);
    REQUIRE(q2.size() == 3);
    CHECK(q2[0] == 192);
    CHECK(q2[1] == -54);
    CHECK(q2[2] == 1);

    // integrality up to n = 12
    for (int n = 0; n <= 12; ++n)
        for (const rational& c : q_poly(n)) CHECK(denominator(c) == 1);
}

TEST_CASE("g_n expansion principal part and first coefficients") {
    // g_n = q^{-n/2} + O(q^{1/2}); keys are exponents times 8
    for (int n : {1, 2, 5}) {
        HalfIntSeries g = g_expansion(n, 30);
        CHECK(g.lowest() == -4L * n);
        CHECK(g.coeff(-4L * n) == 1);
        for (long k = -4L * n + 1; k <= 0; ++k) CHECK(g.coeff(k) == 0);
        // only half-integer exponents appear
        for (auto& [k, v] : g.terms()) CHECK(k % 4 == 0);
    }
    HalfIntSeries g1 = g_expansion(1, 41);
    CHECK(g1.coeff(4) == 252);
    CHECK(g1.coeff(8) == 3640);
    CHECK(g1.coeff(12) == 26760);
    CHECK(g1.coeff(16) == 143136);
    CHECK(g1.coeff(20) == 631280);
}

TEST_CASE("expansion coefficients at the other cusp") {
    std::vector<rational> c0 = g_cusp1_coefficients(0, 6);
    REQUIRE(c0.size() == 6);
    long want0[6] = {8, 24, 24, 32, 48, 24};
    for (int i = 0; i < 6; ++i) CHECK(c0[i] == want0[i]);

    std::vector<rational> c1 = g_cusp1_coefficients(1, 6);
    long want1[6] = {-240, -33488, -885456, -12288960, -117966240, -884736720};
    for (int i = 0; i < 6; ++i) CHECK(c1[i] == want1[i]);
}

TEST_CASE("pointwise value matches the q-expansion") {
    Cd tau(0.3, 1.6);
    Cd q8 = std::exp(Cd(0, M_PI / 4) * tau);
    for (int n : {1, 4}) {
        HalfIntSeries g = g_expansion(n, 700);
        Cd sum = 0;
        for (auto& [k, v] : g.terms()) sum += to_real<double>(v) * std::pow(q8, double(k));
        Cd direct = g_eval(n, tau);
        CHECK(std::abs(sum - direct) < 1e-9 * std::abs(direct));
    }
}

TEST_CASE("g_n is invariant under the group") {
    Cd tau(0.2, 0.9);
    for (int n : {1, 3}) {
        Cd v = g_eval(n, tau);
        // weight 3/2: |g(g tau)| = |c tau + d|^{3/2} |g(tau)|
        GroupElement s = GroupElement::S();
        Cd cd = Cd(double(s.c), 0) * tau + Cd(double(s.d), 0);
        Cd vs = g_eval(n, s.apply(tau));
        CHECK(std::abs(std::abs(vs) - std::pow(std::abs(cd), 1.5) * std::abs(v)) <
              1e-9 * std::abs(vs));
        Cd vt = g_eval(n, tau + Cd(2, 0));
        CHECK(std::abs(vt - v) < 1e-10 * std::abs(v));
    }
}

TEST_CASE("widened Horner agrees with plain evaluation where both are safe") {
    // far from the cancellation zone the double path is fine on its own
    Cd tau(0.3, 2.5);
    LambdaJ<Cd> lj = lambda_j_eval(tau);
    for (int n : {3, 8}) {
        Cd v = q_poly_value(n, lj.J);
        Cd plain = 0;
        const std::vector<rational>& q = q_poly(n);
        for (int j = n; j >= 0; --j) plain = plain * lj.J + to_real<double>(q[j]);
        CHECK(std::abs(v - plain) < 1e-10 * std::abs(plain));
    }
    // multiprecision and double front-ends agree
    mpreal::default_precision(30);
    mpcomplex J(lj.J);
    Cd vmp = q_poly_value(8, J).to_double();
    CHECK(std::abs(vmp - q_poly_value(8, lj.J)) < 1e-12 * std::abs(vmp));
}
