#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "series.hpp"

using namespace sqrtlat;

// exponents are in units of 1/8, so q^{1/2} sits at key 4

TEST_CASE("one and coefficient access") {
    HalfIntSeries e = HalfIntSeries::one(40);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(17) == 0);
    CHECK(e.lowest() == 0);
    CHECK_THROWS_AS(e.coeff(40), std::out_of_range);
}

TEST_CASE("product by hand") {
    // (q^{-1/2} + 2 q^{1/8}) * (3 + q^{1/4}) = 3 q^{-1/2} + q^{-1/4} + 6 q^{1/8} + 2 q^{3/8}
    HalfIntSeries a(40), b(40);
    a.set(-4, 1);
    a.set(1, 2);
    b.set(0, 3);
    b.set(2, 1);
    HalfIntSeries p = a * b;
    CHECK(p.coeff(-4) == 3);
    CHECK(p.coeff(-2) == 1);
    CHECK(p.coeff(1) == 6);
    CHECK(p.coeff(3) == 2);
    CHECK(p.coeff(0) == 0);
    // truncation order: 40 + lowest of the other factor
    CHECK(p.order() == 36);
}

TEST_CASE("addition and cancellation") {
    HalfIntSeries a(20), b(20);
    a.set(3, rational(5, 2));
    b.set(3, rational(-5, 2));
    b.set(7, 1);
    HalfIntSeries s = a + b;
    CHECK(s.coeff(3) == 0);
    CHECK(s.coeff(7) == 1);
    CHECK(s.lowest() == 7);
    CHECK((a - a).is_zero());
}

TEST_CASE("reciprocal") {
    // 1/(1 - q^{1/2}) = 1 + q^{1/2} + q + ...
    HalfIntSeries a(33);
    a.set(0, 1);
    a.set(4, -1);
    HalfIntSeries r = a.reciprocal();
    for (long k = 0; k < r.order(); ++k)
        CHECK(r.coeff(k) == (k % 4 == 0 ? 1 : 0));
    HalfIntSeries prod = a * r;
    CHECK(prod.coeff(0) == 1);
    for (long k = 1; k < prod.order(); ++k) CHECK(prod.coeff(k) == 0);
}

TEST_CASE("reciprocal with a pole") {
    // 1/(q^{-1/2}(1 + q)) starts at q^{1/2}
    HalfIntSeries a(30);
    a.set(-4, 1);
    a.set(4, 1);
    HalfIntSeries r = a.reciprocal();
    CHECK(r.lowest() == 4);
    CHECK(r.coeff(4) == 1);
    CHECK(r.coeff(12) == -1);
    CHECK(r.coeff(20) == 1);
}

TEST_CASE("pow matches repeated product") {
    HalfIntSeries a(25);
    a.set(-2, 1);
    a.set(1, rational(1, 3));
    a.set(5, -2);
    HalfIntSeries p3 = a.pow(3);
    HalfIntSeries ref = a * a * a;
    long ord = std::min(p3.order(), ref.order());
    CHECK(ord > 10);
    for (long k = -6; k < ord; ++k) CHECK(p3.coeff(k) == ref.coeff(k));
    HalfIntSeries p0 = a.pow(0);
    CHECK(p0.coeff(0) == 1);
    CHECK(p0.lowest() == 0);
}
