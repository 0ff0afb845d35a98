#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reduction.hpp"

#include <complex>
#include <random>

using namespace sqrtlat;
using Cd = std::complex<double>;

static bool in_domain(Cd z) {
    return std::abs(z.real()) <= 1 + 1e-12 && std::norm(z) >= 1 - 1e-12;
}

TEST_CASE("group element basics") {
    GroupElement id = GroupElement::identity();
    CHECK(id.unimodular());
    CHECK(id.in_theta_group());
    CHECK(GroupElement::S().in_theta_group());
    CHECK(GroupElement::T2(3).in_theta_group());
    // T (shift by 1) is unimodular but not in the group
    GroupElement t1{1, 1, 0, 1};
    CHECK(t1.unimodular());
    CHECK(!t1.in_theta_group());

    GroupElement g = GroupElement::S() * GroupElement::T2(-2);
    CHECK(g.in_theta_group());
    GroupElement gi = g * g.inverse();
    CHECK(gi.a == 1);
    CHECK(gi.b == 0);
    CHECK(gi.c == 0);
    CHECK(gi.d == 1);
}

TEST_CASE("reduce maps into the fundamental domain") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(-40, 40), uy(-3, 1.5);
    for (int i = 0; i < 500; ++i) {
        Cd tau(ux(rng), std::pow(10.0, uy(rng)));
        Reduction<Cd> r = reduce_point(tau);
        CHECK(in_domain(r.reduced));
        CHECK(r.gamma.in_theta_group());
        // gamma applied to the input reproduces the reduced point
        Cd img = r.gamma.apply(tau);
        CHECK(std::abs(img - r.reduced) < 1e-9 * (1 + std::abs(r.reduced)));
    }
}

TEST_CASE("translates reduce to the same point") {
    Cd tau(0.37, 0.9);
    Reduction<Cd> base = reduce_point(tau);
    for (long long k : {-5LL, -1LL, 1LL, 4LL}) {
        Reduction<Cd> r = reduce_point(tau + Cd(double(2 * k), 0));
        CHECK(std::abs(r.reduced - base.reduced) < 1e-13);
    }
    // and -1/tau as well
    Reduction<Cd> rs = reduce_point(-1.0 / tau);
    CHECK(std::abs(rs.reduced - base.reduced) < 1e-13);
}

TEST_CASE("reduction is idempotent") {
    Cd tau(12.8, 0.004);
    Reduction<Cd> r1 = reduce_point(tau);
    Reduction<Cd> r2 = reduce_point(r1.reduced);
    CHECK(std::abs(r2.reduced - r1.reduced) < 1e-14);
    CHECK(r2.inversions == 0);
}

TEST_CASE("lower half-plane rejected") {
    CHECK_THROWS_AS(reduce_point(Cd(0.5, -1.0)), std::invalid_argument);
    CHECK_THROWS_AS(reduce_point(Cd(0.5, 0.0)), std::invalid_argument);
}
