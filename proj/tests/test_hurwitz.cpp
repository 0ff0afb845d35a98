#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hurwitz.hpp"

#include <cmath>

using namespace sqrtlat;

// reference digits from a 30-digit independent evaluation
static void check_val(double s, double a, double want, double rel = 2e-15) {
    double got = hurwitz_zeta(s, a).convert_to<double>();
    CHECK(std::fabs(got - want) <= rel * std::fabs(want));
}

TEST_CASE("moderate arguments") {
    check_val(-0.5, 0.375, 0.088468585019180552409);
    check_val(0.5, 0.375, -0.26070298226521980978);
    check_val(0.0, 0.25, 0.25);  // 1/2 - a
    check_val(-1.0, 0.999999999, -0.0833333328333334, 1e-7);
}

TEST_CASE("negative s, summation route") {
    check_val(-10.3, 0.375, -0.013416969003660101945);
}

TEST_CASE("very negative s, reflection route") {
    // plain Euler-Maclaurin loses ~|s| log|s| bits here
    check_val(-50.0, 0.375, -8.4414408960166768309e+23);
    check_val(-27.5, 0.625, -2048928.6803847221908);
}

TEST_CASE("special values against the Bernoulli ladder") {
    // zeta(-1, 1) = -1/12, zeta(-3, 1) = 1/120
    check_val(-1.0, 0.9999999999999, -1.0 / 12.0, 1e-10);
    check_val(-3.0, 0.9999999999999, 1.0 / 120.0, 1e-9);
}

TEST_CASE("reflection formula closes on itself") {
    // zeta(s, a) + zeta(s, 1-a) = sum over both cosets; check the symmetric
    // combination at negative even s, where it must vanish for a = 1/2
    double v = hurwitz_zeta(-2.0, 0.5).convert_to<double>();
    CHECK(std::fabs(v) < 1e-15);  // -B_3(1/2)/3 = 0
    // the two routes (summation vs reflection) join continuously in s
    double lo = hurwitz_zeta(-27.999, 0.375).convert_to<double>();
    double hi = hurwitz_zeta(-28.001, 0.375).convert_to<double>();
    CHECK(std::fabs(lo - hi) < 0.05 * (std::fabs(lo) + std::fabs(hi)));
}

TEST_CASE("precision follows the call site") {
    mpreal::default_precision(40);
    mpreal hi = hurwitz_zeta(-0.5, 0.375);
    mpreal::default_precision(16);
    mpreal lo = hurwitz_zeta(-0.5, 0.375);
    mpreal::default_precision(45);  // parse the reference at full width
    CHECK(abs(hi - mpreal("0.08846858501918055240919314891533291825920")) < mpreal("1e-36"));
    CHECK(abs(lo - hi) < mpreal("1e-14"));
    mpreal::default_precision(30);
}
