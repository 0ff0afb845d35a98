// sqrtlat command line tool: pointwise evaluation, coefficient tables, zero
// counts, moments, and the reproducible figures. All computation goes through
// the C API; these files only parse arguments and emit CSV/SVG.

#include "csv.hpp"
#include "figures.hpp"

#include "sqrtlat.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using cli::cli_error;
using cli::CsvWriter;
using cli::fmt;
using cli::fmt_complex;
using cli::EXIT_TOLERANCE;
using cli::EXIT_VALIDATION;

namespace {

void check(sqrtlat_status st, const std::string& what) {
    if (st == SQRTLAT_OK) return;
    int code = (st == SQRTLAT_ETOL) ? EXIT_TOLERANCE : EXIT_VALIDATION;
    throw cli_error{code, what + ": " + sqrtlat_strerror(st)};
}

struct SolverHandle {
    sqrtlat_solver* s = nullptr;
    explicit SolverHandle(int n_max) {
        check(sqrtlat_solver_new(cli::solver_size_for(n_max), -1.0, &s), "solver");
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

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"square-root lattice interpolation basis toolkit"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");

    auto* c_eval = app.add_subcommand("eval", "evaluate f_n(x)");
    int ev_n = 0;
    double ev_x = 0;
    std::string ev_method = "collocation";
    c_eval->add_option("--n", ev_n)->required();
    c_eval->add_option("--x", ev_x)->required();
    c_eval->add_option("--method", ev_method)
        ->check(CLI::IsMember({"collocation", "contour", "laplace", "phi"}));

    auto* c_table = app.add_subcommand("table", "CSV table of f_n over an x grid");
    int tb_nmax = 0;
    double tb_xmin = 0, tb_xmax = 0, tb_step = 0;
    std::string tb_out = "-";
    c_table->add_option("--nmax", tb_nmax)->required();
    c_table->add_option("--xmin", tb_xmin)->required();
    c_table->add_option("--xmax", tb_xmax)->required();
    c_table->add_option("--step", tb_step)->required();
    c_table->add_option("--out", tb_out);

    auto* c_gexp = app.add_subcommand("gn-expansion", "Fourier coefficients of g_n");
    int gx_n = 0, gx_order = 0;
    c_gexp->add_option("--n", gx_n)->required();
    c_gexp->add_option("--order", gx_order)->required();

    auto* c_kl = app.add_subcommand("kloosterman", "single Kloosterman-type sum");
    long kl_m = 0, kl_n = 0, kl_c = 0;
    bool kl_tilde = false;
    c_kl->add_option("--m", kl_m)->required();
    c_kl->add_option("--n", kl_n)->required();
    c_kl->add_option("--c", kl_c)->required();
    c_kl->add_flag("--tilde", kl_tilde);

    auto* c_coeff = app.add_subcommand("coeff", "expansion coefficient a_{m,n}");
    long cf_m = 0, cf_n = 0, cf_cmax = 200;
    bool cf_tilde = false;
    std::string cf_method = "rademacher";
    c_coeff->add_option("--m", cf_m)->required();
    c_coeff->add_option("--n", cf_n)->required();
    c_coeff->add_option("--method", cf_method)->check(CLI::IsMember({"rademacher", "expansion"}));
    c_coeff->add_option("--cmax", cf_cmax);
    c_coeff->add_flag("--tilde", cf_tilde);

    auto* c_phi = app.add_subcommand("phi", "value of Phi");
    double ph_re = 0, ph_im = 0;
    c_phi->add_option("--re", ph_re)->required();
    c_phi->add_option("--im", ph_im);
    auto* c_psi = app.add_subcommand("psi", "value of Psi on the real line");
    double ps_x = 0;
    c_psi->add_option("--x", ps_x)->required();
    auto* c_psim = app.add_subcommand("psi-moment", "normalized second moment of Psi");
    double pm_t = 0;
    c_psim->add_option("--T", pm_t)->required();

    auto* c_zeros = app.add_subcommand("zeros", "zero counts and locations");
    int zr_n = 0;
    double zr_t1 = 0, zr_t2 = 0, zr_rect = 0, zr_step = 0.05;
    std::vector<double> zr_real;
    std::string zr_out = "-";
    c_zeros->add_option("--n", zr_n)->required();
    c_zeros->add_option("--t1", zr_t1);
    c_zeros->add_option("--t2", zr_t2);
    c_zeros->add_option("--rect", zr_rect);
    c_zeros->add_option("--real", zr_real)->expected(2);
    c_zeros->add_option("--step", zr_step);
    c_zeros->add_option("--out", zr_out);

    auto* c_mom = app.add_subcommand("moment", "integral of f_n^2 over [a, b]");
    int mm_n = 0;
    double mm_a = 0, mm_b = 0;
    std::string mm_out = "-";
    c_mom->add_option("--n", mm_n)->required();
    c_mom->add_option("--a", mm_a)->required();
    c_mom->add_option("--b", mm_b)->required();
    c_mom->add_option("--out", mm_out);

    auto* c_l2 = app.add_subcommand("l2sum", "sum of integrals of f_n^2, n <= xi");
    int l2_xi = 0;
    double l2_cut = -1;
    c_l2->add_option("--xi", l2_xi)->required();
    c_l2->add_option("--xcut", l2_cut);

    auto* c_hist = app.add_subcommand("histogram", "histogram of n^{1/4} f_n(x0)");
    double hs_x0 = 0.63;
    int hs_nmax = 2000, hs_bins = 60;
    std::string hs_out = "-";
    c_hist->add_option("--x0", hs_x0);
    c_hist->add_option("--nmax", hs_nmax);
    c_hist->add_option("--bins", hs_bins);
    c_hist->add_option("--out", hs_out);

    auto* c_vi = app.add_subcommand("verify-interp", "interpolation formula residual");
    double vi_t = 0, vi_tol = 1e-6;
    std::vector<double> vi_grid{0.2, 0.7, 1.3, 2.1};
    c_vi->add_option("--t", vi_t)->required();
    c_vi->add_option("--grid", vi_grid);
    c_vi->add_option("--tol", vi_tol);

    auto* c_fig = app.add_subcommand("figure", "reproduce a figure (CSV + SVG)");
    std::string fg_id, fg_dir = ".";
    int fg_nmax = -1;
    c_fig->add_option("--id", fg_id)
        ->required()
        ->check(CLI::IsMember({"f500", "bulk", "histogram", "l2norms"}));
    c_fig->add_option("--out-dir", fg_dir);
    c_fig->add_option("--nmax", fg_nmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_VALIDATION;
    }

    // the library reads the file lazily on first use
    if (!config_path.empty()) setenv("SQRTLAT_CONFIG", config_path.c_str(), 1);

    try {
        if (*c_eval) {
            double value = 0, err = 0, im = 0;
            if (ev_method == "collocation") {
                SolverHandle sol(ev_n);
                value = sol.eval(ev_x, &err)[ev_n];
            } else if (ev_method == "contour") {
                check(sqrtlat_eval_contour(ev_n, ev_x, 0, 0, &value, &im, &err), "contour");
            } else if (ev_method == "laplace") {
                check(sqrtlat_eval_laplace(ev_n, ev_x, 120, &value, &err), "laplace");
            } else {
                check(sqrtlat_eval_phi_approx(ev_n, ev_x, 0, &value, &im, &err), "phi approx");
            }
            std::printf("%d,%s,%s,%s,%s\n", ev_n, fmt(ev_x).c_str(), fmt(value).c_str(),
                        ev_method.c_str(), fmt(err).c_str());
        } else if (*c_table) {
            if (!(tb_step > 0) || tb_xmax < tb_xmin || tb_nmax < 0)
                throw cli_error{EXIT_VALIDATION, "bad table grid"};
            SolverHandle sol(tb_nmax);
            CsvWriter csv(tb_out);
            csv.row({"n", "x", "value", "method", "err"});
            for (double x = tb_xmin; x <= tb_xmax + tb_step / 2; x += tb_step) {
                double xc = std::min(x, tb_xmax), err;
                std::vector<double> f = sol.eval(xc, &err);
                for (int n = 0; n <= tb_nmax; ++n)
                    csv.row({std::to_string(n), fmt(xc), fmt(f[n]), "collocation", fmt(err)});
            }
        } else if (*c_gexp) {
            if (gx_order < 1) throw cli_error{EXIT_VALIDATION, "order must be positive"};
            std::vector<double> a(gx_order);
            check(sqrtlat_g_expansion(gx_n, gx_order, a.data()), "expansion");
            CsvWriter csv("-");
            csv.row({"nu", "value"});
            for (int nu = 1; nu <= gx_order; ++nu)
                csv.row({std::to_string(nu), fmt(a[nu - 1])});
        } else if (*c_kl) {
            double re, im;
            check(sqrtlat_kloosterman(kl_m, kl_n, kl_c, kl_tilde ? 1 : 0, &re, &im),
                  "kloosterman");
            std::printf("%s\n", fmt_complex(re, im).c_str());
        } else if (*c_coeff) {
            double value = 0, err = 0;
            if (cf_method == "rademacher") {
                check(sqrtlat_rademacher(cf_m, cf_n, cf_cmax, cf_tilde ? 1 : 0, &value, &err),
                      "rademacher");
            } else if (cf_tilde) {
                std::vector<double> a(cf_n + 1);
                check(sqrtlat_g_cusp1_coeffs(int(cf_m), int(cf_n) + 1, a.data()), "expansion");
                value = a[cf_n];
            } else {
                if (cf_n < 1) throw cli_error{EXIT_VALIDATION, "need n >= 1"};
                std::vector<double> a(cf_n);
                check(sqrtlat_g_expansion(int(cf_m), int(cf_n), a.data()), "expansion");
                value = a[cf_n - 1];
            }
            std::printf("%s,%s\n", fmt(value).c_str(), fmt(err).c_str());
        } else if (*c_phi) {
            double re, im;
            check(sqrtlat_phi(ph_re, ph_im, &re, &im), "phi");
            std::printf("%s\n", fmt_complex(re, im).c_str());
        } else if (*c_psi) {
            double v;
            check(sqrtlat_psi(ps_x, &v), "psi");
            std::printf("%s\n", fmt(v).c_str());
        } else if (*c_psim) {
            double v;
            check(sqrtlat_psi_moment(pm_t, &v), "psi moment");
            std::printf("%s\n", fmt(v).c_str());
        } else if (*c_zeros) {
            CsvWriter csv(zr_out);
            if (!zr_real.empty()) {
                std::vector<double> z(4096);
                int count;
                check(sqrtlat_real_zeros(zr_n, zr_real[0], zr_real[1], zr_step, z.data(),
                                         int(z.size()), &count),
                      "real zeros");
                csv.row({"n", "zero"});
                for (int i = 0; i < count; ++i) csv.row({std::to_string(zr_n), fmt(z[i])});
            } else if (zr_rect > 0) {
                int count;
                check(sqrtlat_count_zeros_rect(zr_n, zr_rect, &count), "rectangle count");
                csv.row({"n", "kind", "a", "b", "count"});
                csv.row({std::to_string(zr_n), "rectangle", fmt(0.0), fmt(zr_rect),
                         std::to_string(count)});
            } else if (zr_t2 > zr_t1) {
                int count;
                check(sqrtlat_count_zeros_delta(zr_n, zr_t1, zr_t2, &count), "delta count");
                csv.row({"n", "kind", "a", "b", "count"});
                csv.row({std::to_string(zr_n), "delta_window", fmt(zr_t1), fmt(zr_t2),
                         std::to_string(count)});
            } else {
                throw cli_error{EXIT_VALIDATION, "zeros needs --t1/--t2, --rect, or --real a b"};
            }
        } else if (*c_mom) {
            double value, err;
            check(sqrtlat_moment(nullptr, mm_n, mm_a, mm_b, &value, &err), "moment");
            CsvWriter csv(mm_out);
            csv.row({"n", "a", "b", "value", "err"});
            csv.row({std::to_string(mm_n), fmt(mm_a), fmt(mm_b), fmt(value), fmt(err)});
        } else if (*c_l2) {
            if (l2_cut <= 0) l2_cut = l2_xi + 40.0 * std::sqrt(double(l2_xi > 0 ? l2_xi : 1));
            double value, err;
            check(sqrtlat_l2_sum(l2_xi, l2_cut, &value, &err), "l2 sum");
            double lx = std::log(double(l2_xi));
            std::printf("value,%s\nerr,%s\nvalue_over_xi_log_xi,%s\nvalue_over_xi_log2_xi,%s\n",
                        fmt(value).c_str(), fmt(err).c_str(), fmt(value / (l2_xi * lx)).c_str(),
                        fmt(value / (l2_xi * lx * lx)).c_str());
        } else if (*c_hist) {
            if (hs_bins < 1 || hs_nmax < 1)
                throw cli_error{EXIT_VALIDATION, "need positive bins and nmax"};
            cli::emit_histogram(hs_out, "", hs_x0, hs_nmax, hs_bins);
        } else if (*c_vi) {
            double max_err;
            check(sqrtlat_verify_interp(vi_t, vi_grid.data(), int(vi_grid.size()), 0, &max_err),
                  "verify");
            std::printf("max_err,%s\n", fmt(max_err).c_str());
            if (!(max_err < vi_tol)) return EXIT_TOLERANCE;
        } else if (*c_fig) {
            if (fg_id == "f500") {
                cli::figure_f500(fg_dir);
            } else if (fg_id == "bulk") {
                cli::figure_bulk(fg_dir);
            } else if (fg_id == "histogram") {
                cli::emit_histogram(fg_dir + "/histogram.csv", fg_dir + "/histogram.svg", 0.63,
                                    fg_nmax > 0 ? fg_nmax : 2000, 60);
            } else {
                cli::figure_l2norms(fg_dir, fg_nmax > 0 ? fg_nmax : 300);
            }
        }
    } catch (const cli_error& e) {
        std::fprintf(stderr, "error: %s\n", e.msg.c_str());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return EXIT_VALIDATION;
    }
    return 0;
}
