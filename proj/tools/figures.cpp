#include "figures.hpp"

#include "csv.hpp"
#include "svg.hpp"

#include "sqrtlat.h"

#include <cmath>
#include <fstream>
#include <vector>

namespace cli {

namespace {

void check(sqrtlat_status st, const std::string& what) {
    if (st == SQRTLAT_OK) return;
    int code = (st == SQRTLAT_ETOL) ? EXIT_TOLERANCE : EXIT_VALIDATION;
    throw cli_error{code, what + ": " + sqrtlat_strerror(st)};
}

struct SolverHandle {
    sqrtlat_solver* s = nullptr;
    explicit SolverHandle(int n_max) {
        check(sqrtlat_solver_new(solver_size_for(n_max), -1.0, &s), "solver");
    }
    ~SolverHandle() { sqrtlat_solver_free(s); }
    std::vector<double> eval(double x, double* err = nullptr) const {
        std::vector<double> v(sqrtlat_solver_size(s));
        double e;
        check(sqrtlat_solver_eval(s, x, v.data(), &e), "solve");
        if (err) *err = e;
        return v;
    }
};

// 12-point Gauss-Legendre rule on [-1, 1], used by the l2norms driver
const double gl12_x[12] = {
    -0.98156063424671925069, -0.90411725637047485668, -0.76990267419430468704,
    -0.58731795428661744730, -0.36783149899818019375, -0.12523340851146891547,
    0.12523340851146891547,  0.36783149899818019375,  0.58731795428661744730,
    0.76990267419430468704,  0.90411725637047485668,  0.98156063424671925069};
const double gl12_w[12] = {
    0.047175336386511827195, 0.106939325995318430960, 0.160078328543346226335,
    0.203167426723065921749, 0.233492536538354808761, 0.249147045813402785001,
    0.249147045813402785001, 0.233492536538354808761, 0.203167426723065921749,
    0.160078328543346226335, 0.106939325995318430960, 0.047175336386511827195};

}  // namespace

int solver_size_for(int n_max) {
    int a = n_max + 50, b = (n_max * 12 + 9) / 10;
    return a > b ? a : b;
}

void figure_f500(const std::string& dir) {
    const int n = 500;
    SolverHandle sol(n);
    CsvWriter csv(dir + "/f500.csv");
    csv.row({"x", "f", "phi_approx"});
    Series sf, sp;
    for (int k = 0; k <= 1200; ++k) {
        double x = 350 + 0.25 * k;
        double f = sol.eval(x)[n];
        double fp;
        if (x == double(n)) {
            fp = 1.0;  // removable point: sin pi(x-n) * Phi(sqrt x - sqrt n)/sqrt n -> 1
        } else {
            double pre, pim;
            check(sqrtlat_phi(std::sqrt(x) - std::sqrt(double(n)), 0, &pre, &pim), "phi");
            fp = std::sin(M_PI * (x - n)) * pre / std::sqrt(double(n));
        }
        csv.row({fmt(x), fmt(f), fmt(fp)});
        sf.x.push_back(x);
        sf.y.push_back(f);
        sp.x.push_back(x);
        sp.y.push_back(fp);
    }
    write_svg(dir + "/f500.svg", {sf, sp}, "x", "f_500(x)");
}

void figure_bulk(const std::string& dir) {
    SolverHandle sol(150);
    CsvWriter csv(dir + "/bulk.csv");
    std::vector<std::string> head{"x"};
    for (int n = 100; n <= 150; ++n) head.push_back("f" + std::to_string(n));
    csv.row(head);
    std::vector<Series> series(51);
    double global_max = 0;
    for (int k = 0; k <= 200; ++k) {
        double x = 0.01 * k;
        std::vector<double> f = sol.eval(x);
        std::vector<std::string> cells{fmt(x)};
        for (int n = 100; n <= 150; ++n) {
            cells.push_back(fmt(f[n]));
            series[n - 100].x.push_back(x);
            series[n - 100].y.push_back(f[n]);
            global_max = std::max(global_max, std::fabs(f[n]));
        }
        csv.row(cells);
    }
    write_svg(dir + "/bulk.svg", series, "x", "f_n(x)");
    std::ofstream j(dir + "/bulk.json");
    j << "{\"n_lo\": 100, \"n_hi\": 150, \"global_max_abs\": " << fmt(global_max) << "}\n";
}

void emit_histogram(const std::string& csv_path, const std::string& svg_path,
                    double x0, int n_max, int bins) {
    std::vector<double> v(n_max);
    check(sqrtlat_histogram_values(x0, n_max, v.data()), "histogram");
    double vmax = 0;
    for (double t : v) vmax = std::max(vmax, std::fabs(t));
    if (vmax == 0) vmax = 1;
    std::vector<long> count(bins, 0);
    for (double t : v) {
        int b = int((t + vmax) / (2 * vmax) * bins);
        if (b < 0) b = 0;
        if (b >= bins) b = bins - 1;
        ++count[b];
    }
    CsvWriter csv(csv_path);
    csv.row({"bin_lo", "bin_hi", "count"});
    Series bars;
    for (int b = 0; b < bins; ++b) {
        double lo = -vmax + 2 * vmax * b / bins, hi = -vmax + 2 * vmax * (b + 1) / bins;
        csv.row({fmt(lo), fmt(hi), std::to_string(count[b])});
        bars.x.push_back(lo);
        bars.y.push_back(0);
        bars.x.push_back(lo);
        bars.y.push_back(double(count[b]));
        bars.x.push_back(hi);
        bars.y.push_back(double(count[b]));
        bars.x.push_back(hi);
        bars.y.push_back(0);
    }
    if (!svg_path.empty()) write_svg(svg_path, {bars}, "n^{1/4} f_n(x0)", "count");
}

// integral of f_n^2 over [0, n + 40 sqrt n] for every n at once: shared unit
// panels, one batched solve per quadrature node, per-n fractional end panel
void figure_l2norms(const std::string& dir, int n_max) {
    SolverHandle sol(n_max);
    std::vector<double> cut(n_max + 1), acc(n_max + 1, 0), at_floor(n_max + 1, 0);
    double top = 0;
    for (int n = 1; n <= n_max; ++n) {
        cut[n] = n + 40.0 * std::sqrt(double(n));
        top = std::max(top, cut[n]);
    }
    long whole = long(std::floor(top));
    auto panel = [&](double a, double b, std::vector<double>& into, int only_n) {
        double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
        for (int q = 0; q < 12; ++q) {
            std::vector<double> f = sol.eval(mid + hw * gl12_x[q]);
            if (only_n >= 0)
                into[only_n] += hw * gl12_w[q] * f[only_n] * f[only_n];
            else
                for (int n = 1; n <= n_max; ++n) into[n] += hw * gl12_w[q] * f[n] * f[n];
        }
    };
    for (long u = 0; u < whole; ++u) {
        for (int n = 1; n <= n_max; ++n)
            if (double(u) == std::floor(cut[n])) at_floor[n] = acc[n];
        panel(double(u), double(u + 1), acc, -1);
    }
    for (int n = 1; n <= n_max; ++n)
        if (std::floor(cut[n]) >= whole) at_floor[n] = acc[n];
    CsvWriter csv(dir + "/l2norms.csv");
    csv.row({"n", "integral", "reference"});
    Series si, sr;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<double> stub(n_max + 1, 0);
        double lo = std::floor(cut[n]);
        if (cut[n] > lo) panel(lo, cut[n], stub, n);
        double value = at_floor[n] + stub[n];
        double ref = 0.6 * std::log(double(n));
        csv.row({std::to_string(n), fmt(value), fmt(ref)});
        si.x.push_back(n);
        si.y.push_back(value);
        sr.x.push_back(n);
        sr.y.push_back(ref);
    }
    write_svg(dir + "/l2norms.svg", {si, sr}, "n", "int f_n^2");
}

}  // namespace cli
