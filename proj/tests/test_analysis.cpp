#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "analysis.hpp"

#include <cmath>

using namespace sqrtlat;

TEST_CASE("real zeros of the small-n quotient") {
    ZeroReport r = real_zeros(3, 0.1, 2.5, 0.05);
    REQUIRE(r.count == 3);
    CHECK(std::fabs(r.real_zeros[0] - 0.283072) < 1e-4);
    CHECK(std::fabs(r.real_zeros[1] - 0.532832) < 1e-4);
    CHECK(std::fabs(r.real_zeros[2] - 1.941434) < 1e-4);
    // zero-free window
    ZeroReport r2 = real_zeros(3, 2.0, 2.5, 0.02);
    CHECK(r2.count == 0);
}

TEST_CASE("delta-window winding count") {
    ZeroReport r = count_zeros_delta(500, 10, 60);
    CHECK(r.count == 50);
    // additivity over a split of the window
    ZeroReport a = count_zeros_delta(500, 10, 34);
    ZeroReport b = count_zeros_delta(500, 34, 60);
    CHECK(a.count + b.count == r.count);
    CHECK(a.count == 24);
}

TEST_CASE("degenerate windows rejected") {
    CHECK_THROWS(count_zeros_delta(500, 60, 10));
    CHECK_THROWS(real_zeros(3, 2.5, 0.1, 0.05));
    CHECK_THROWS(count_zeros_rectangle(10, -1.0));
}

TEST_CASE("rectangle winding count") {
    ZeroReport r = count_zeros_rectangle(100, 10.0);
    CHECK(r.count == 58);
    CHECK(r.winding_samples > 100);
}

TEST_CASE("moment integral consistency") {
    auto sol = shared_solver(solver_size_for(20));
    MomentResult whole = moment_fn(20, 2.0, 12.0, sol.get());
    MomentResult left = moment_fn(20, 2.0, 7.0, sol.get());
    MomentResult right = moment_fn(20, 7.0, 12.0, sol.get());
    CHECK(std::fabs(left.value + right.value - whole.value) <
          10 * (left.err + right.err + whole.err) + 1e-12);
    CHECK(whole.value > 0);
}

TEST_CASE("moment profile matches single-n moments") {
    std::vector<int> ns{5, 9, 14};
    auto cut = [](int n) { return n + 4.0; };
    std::vector<MomentResult> prof = moment_profile(ns, cut);
    REQUIRE(prof.size() == 3);
    auto sol = shared_solver(solver_size_for(14));
    for (size_t i = 0; i < ns.size(); ++i) {
        MomentResult one = moment_fn(ns[i], 0.0, cut(ns[i]), sol.get());
        CHECK(std::fabs(prof[i].value - one.value) < 1e-8 * (1 + one.value));
    }
}

TEST_CASE("l2 sum runs and is positive") {
    MomentResult s = l2_sum(20, 20 + 40 * std::sqrt(20.0));
    CHECK(s.value > 0);
    double xi = 20;
    CHECK(s.value / (xi * std::log(xi)) > 0.05);
    CHECK(s.value / (xi * std::log(xi)) < 20);
}

TEST_CASE("histogram values") {
    std::vector<double> v = histogram_values(0.63, 60);
    REQUIRE(v.size() == 60);
    for (int n = 1; n <= 60; ++n) {
        CHECK(std::isfinite(v[n - 1]));
        CHECK(std::fabs(v[n - 1]) < 10);
    }
}

TEST_CASE("interpolation identity") {
    std::vector<double> grid{0.2, 0.7, 1.3, 2.1};
    CHECK(verify_interpolation(1.0, grid) < 1e-8);  // observed 3.6e-15
    // truncation error decreases as the cutoff grows
    double lo = verify_interpolation(0.05, grid, 80);
    double hi = verify_interpolation(0.05, grid, 120);
    CHECK(hi < lo);
    CHECK(hi < 1e-6);
}
