#include "analysis.hpp"

#include "config.hpp"
#include "contour.hpp"
#include "phi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace sqrtlat {

namespace {

const double pi_d = 3.14159265358979323846;
using Cd = std::complex<double>;

// ---- winding-number machinery ----------------------------------------------

// samples F along [z0, z1] at j/m, j = 0..m; implementations may rescale each
// batch by a positive constant (argument tracking never sees magnitudes
// across batches)
using Sampler = std::function<void(Cd, Cd, int, std::vector<Cd>&)>;

struct WindState {
    double total = 0;        // accumulated argument, radians
    long samples = 0;
    bool near_zero = false;  // a sample got too close to 0 to resolve
    double cap = pi_d / 2;
};

void wind_refine(const Sampler& F, Cd a, Cd fa, Cd b, Cd fb, int depth, WindState& st) {
    if (std::abs(fa) == 0 || std::abs(fb) == 0) {
        st.near_zero = true;
        return;
    }
    double d = std::arg(fb / fa);
    if (std::fabs(d) < st.cap) {
        st.total += d;
        return;
    }
    if (depth <= 0 || std::abs(b - a) < 1e-9) {
        st.near_zero = true;  // unresolvable phase jump: zero on or near the path
        st.total += d;
        return;
    }
    std::vector<Cd> mid;
    F(a, b, 2, mid);
    st.samples += 1;
    wind_refine(F, a, fa, (a + b) * 0.5, mid[1], depth - 1, st);
    wind_refine(F, (a + b) * 0.5, mid[1], b, fb, depth - 1, st);
}

void wind_edge(const Sampler& F, Cd a, Cd b, double per_unit, WindState& st) {
    int m = std::clamp(int(std::ceil(std::abs(b - a) * per_unit)), 8, 40000);
    std::vector<Cd> s;
    F(a, b, m, s);
    st.samples += m + 1;
    double edge_peak = 0;
    for (auto& v : s) edge_peak = std::max(edge_peak, std::abs(v));
    for (int j = 0; j < m; ++j) {
        if (std::abs(s[j]) < 1e-13 * edge_peak || std::abs(s[j + 1]) < 1e-13 * edge_peak)
            st.near_zero = true;
        Cd za = a + (b - a) * (double(j) / m);
        Cd zb = a + (b - a) * (double(j + 1) / m);
        wind_refine(F, za, s[j], zb, s[j + 1], 24, st);
    }
}

// counterclockwise winding number of F over the closed polygon
WindState wind_polygon(const Sampler& F, const std::vector<Cd>& corners,
                       double per_unit, double cap) {
    WindState st;
    st.cap = cap;
    for (size_t i = 0; i < corners.size(); ++i)
        wind_edge(F, corners[i], corners[(i + 1) % corners.size()], per_unit, st);
    return st;
}

Sampler pointwise(const std::function<Cd(Cd)>& f) {
    return [f](Cd a, Cd b, int m, std::vector<Cd>& out) {
        out.resize(m + 1);
        for (int j = 0; j <= m; ++j) out[j] = f(a + (b - a) * (double(j) / m));
    };
}

// ---- quadrature rules -------------------------------------------------------

void gl_rule(int k, std::vector<double>& x, std::vector<double>& w) {
    std::vector<mpreal> xm, wm;
    gauss_legendre(k, xm, wm);
    x.resize(k);
    w.resize(k);
    for (int i = 0; i < k; ++i) {
        x[i] = xm[i].convert_to<double>();
        w[i] = wm[i].convert_to<double>();
    }
}

}  // namespace

// ---- real zeros -------------------------------------------------------------

ZeroReport real_zeros(int n, double a, double b, double grid_step) {
    if (!(0 < a && a < b)) throw std::invalid_argument("need 0 < a < b");
    if (!(grid_step > 0)) throw std::invalid_argument("grid step must be positive");
    ZeroReport rep{n, "real_interval", a, b, 0, 0, 0, {}, 0, false};

    auto s = shared_solver(solver_size_for(std::max(n, 8)));
    auto h = [&](double x) -> double {
        // keep off the integer lattice and away from the pole at x = n
        double m = std::round(x);
        if (std::fabs(x - m) < 1e-3) x = m + (x >= m ? 1e-3 : -1e-3);
        return h_quotient(n, x, s.get());
    };

    double sep = tolerance("zero_separation");
    double bis = tolerance("bisection_tol");
    double res_tol = tolerance("zero_residual");
    double prev_x = a, prev_h = 0;
    bool have_prev = false;
    for (double x = a; x < b + grid_step / 2; x += grid_step) {
        double xc = std::min(x, b);
        if (std::fabs(xc - n) < 0.5) {  // simple pole of the quotient at x = n
            have_prev = false;
            continue;
        }
        double hx;
        try {
            hx = h(xc);
        } catch (const std::exception&) {
            rep.coverage_warning = true;
            have_prev = false;
            continue;
        }
        ++rep.winding_samples;
        if (have_prev && ((prev_h < 0 && hx > 0) || (prev_h > 0 && hx < 0))) {
            double lo = prev_x, hi = xc, flo = prev_h;
            while (hi - lo > bis) {
                double mid = 0.5 * (lo + hi);
                double fm = h(mid);
                ++rep.winding_samples;
                if ((flo < 0) == (fm < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            double zeta = 0.5 * (lo + hi);
            double hz = h(zeta);
            if (std::fabs(hz) < res_tol &&
                (rep.real_zeros.empty() || zeta - rep.real_zeros.back() > sep)) {
                rep.real_zeros.push_back(zeta);
            } else if (std::fabs(hz) >= res_tol) {
                rep.coverage_warning = true;
            }
        }
        prev_x = xc;
        prev_h = hx;
        have_prev = true;
    }
    rep.count = long(rep.real_zeros.size());
    return rep;
}

// ---- zero counting in the Delta window --------------------------------------

namespace {

// h_n along the image of the w-rectangle is Phi(-sqrt w)/sqrt n up to a
// relative error that is exponentially small throughout the admissible
// window, so the winding of Phi(-sqrt w) is the winding of h_n
Cd delta_window_fn(Cd w) { return phi(-std::sqrt(w)); }

}  // namespace

ZeroReport count_zeros_delta(int n, double t1, double t2) {
    if (!(t1 < t2)) throw std::invalid_argument("degenerate or reversed window");
    if (!(t1 >= 3)) throw std::invalid_argument("window start below 3");
    if (!(t2 <= n / 2.0)) throw std::invalid_argument("window end above n/2");
    double yl = std::log(double(n));
    ZeroReport rep{n, "delta_window", t1, t2, -yl, yl, 0, {}, 0, false};

    // validity of the Phi form over the whole window: Re sqrt z stays above
    // (1/3 + eps) sqrt n, checked at the extreme corner
    double worst = std::sqrt(Cd(t2, yl)).real();
    if (std::sqrt(double(n)) - worst <= (1.0 / 3 + 0.05) * std::sqrt(double(n)))
        rep.coverage_warning = true;

    double slack = tolerance("winding_integer_slack");
    double nudge = tolerance("contour_nudge");
    Sampler F = pointwise(delta_window_fn);
    for (int attempt = 0; attempt < 6; ++attempt) {
        double d = attempt * nudge;
        double a = t1 - d, b = t2 + d, y = yl + d;
        std::vector<Cd> corners{{a, -y}, {b, -y}, {b, y}, {a, y}};
        double per_unit = 4.0 * (1 + attempt);
        double cap = attempt < 3 ? pi_d / 2 : pi_d / 4;
        WindState st = wind_polygon(F, corners, per_unit, cap);
        rep.winding_samples += st.samples;
        double turns = st.total / (2 * pi_d);
        if (!st.near_zero && std::fabs(turns - std::round(turns)) < slack) {
            rep.count = long(std::llround(turns));
            rep.a = a;
            rep.b = b;
            rep.y0 = -y;
            rep.y1 = y;
            return rep;
        }
    }
    throw std::runtime_error("winding count failed to stabilize on an integer");
}

// ---- zero counting in the rectangle -----------------------------------------

ZeroReport count_zeros_rectangle(int n, double r, int precision_bits) {
    if (!(r >= 10)) throw std::invalid_argument("rectangle too small");
    if (!(r <= n / 8.0)) throw std::invalid_argument("rectangle too large for this index");
    ZeroReport rep{n, "rectangle", 0, r, -r, r, 0, {}, 0, false};

    double z_scale = r * 1.5;
    ContourEvaluator ev(n, precision_bits, z_scale);
    // the edges cross the real axis, where |f_n| spans far more dynamic range
    // than double holds; track unit phases and keep magnitudes out of it
    Sampler F = [&](Cd a, Cd b, int m, std::vector<Cd>& out) {
        std::vector<double> lm;
        ev.eval_segment_unit(a, b, m, out, lm);
    };

    double slack = tolerance("winding_integer_slack");
    double nudge = tolerance("contour_nudge");
    for (int attempt = 0; attempt < 6; ++attempt) {
        // z = 0 is always a zero of f_n on the boundary (n >= 1), and integer
        // r puts a lattice zero on the right edge: start off the lattice
        double d = (attempt + 1) * nudge;
        double x0 = d;
        double x1 = std::fabs(r - std::round(r)) < 1e-6 ? r - d : r;
        std::vector<Cd> corners{{x0, -r}, {x1, -r}, {x1, r}, {x0, r}};
        double per_unit = 10.0 + 4.0 * attempt;
        double cap = attempt < 3 ? pi_d / 2 : pi_d / 4;
        WindState st = wind_polygon(F, corners, per_unit, cap);
        rep.winding_samples += st.samples;
        double turns = st.total / (2 * pi_d);
        if (!st.near_zero && std::fabs(turns - std::round(turns)) < slack) {
            rep.count = long(std::llround(turns));
            rep.a = x0;
            rep.b = x1;
            return rep;
        }
    }
    throw std::runtime_error("winding count failed to stabilize on an integer");
}

// ---- second moments ---------------------------------------------------------

namespace {

// integral of f_n^2 over [a, b] for every listed n at once, one solve per
// quadrature node; the coarse rule difference feeds the error estimates
struct PanelAccum {
    std::vector<double> fine, coarse;
};

void accumulate_panel(const CollocationSolver& s, const std::vector<int>& ns,
                      double a, double b, PanelAccum& acc) {
    static std::vector<double> x12, w12, x6, w6;
    if (x12.empty()) {
        gl_rule(12, x12, w12);
        gl_rule(6, x6, w6);
    }
    double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
    for (int q = 0; q < 12; ++q) {
        std::vector<double> f = s.eval(mid + hw * x12[q]);
        for (size_t i = 0; i < ns.size(); ++i)
            acc.fine[i] += hw * w12[q] * f[ns[i]] * f[ns[i]];
    }
    for (int q = 0; q < 6; ++q) {
        std::vector<double> f = s.eval(mid + hw * x6[q]);
        for (size_t i = 0; i < ns.size(); ++i)
            acc.coarse[i] += hw * w6[q] * f[ns[i]] * f[ns[i]];
    }
}

}  // namespace

MomentResult moment_fn(int n, double a, double b, const CollocationSolver* solver) {
    if (!(0 <= a && a <= b)) throw std::invalid_argument("need 0 <= a <= b");
    if (a == b) return {n, a, b, 0.0, 0.0, 0};
    std::shared_ptr<const CollocationSolver> owned;
    if (!solver) {
        owned = shared_solver(solver_size_for(std::max(n, 8)));
        solver = owned.get();
    }
    long panels = std::max(1L, long(std::ceil(b - a)));
    double h = (b - a) / double(panels);
    PanelAccum acc;
    acc.fine.assign(1, 0);
    acc.coarse.assign(1, 0);
    std::vector<int> ns{n};
    for (long p = 0; p < panels; ++p)
        accumulate_panel(*solver, ns, a + p * h, a + (p + 1) * h, acc);
    double err = std::fabs(acc.fine[0] - acc.coarse[0]) + 1e-14 * acc.fine[0];
    return {n, a, b, acc.fine[0], err, panels};
}

std::vector<MomentResult> moment_profile(const std::vector<int>& ns,
                                         const std::function<double(int)>& x_cut) {
    if (ns.empty()) return {};
    int n_top = *std::max_element(ns.begin(), ns.end());
    auto s = shared_solver(solver_size_for(std::max(n_top, 8)));
    double top = 0;
    std::vector<double> cuts(ns.size());
    for (size_t i = 0; i < ns.size(); ++i) {
        cuts[i] = x_cut(ns[i]);
        if (!(cuts[i] >= 0)) throw std::invalid_argument("negative cutoff");
        top = std::max(top, cuts[i]);
    }
    // shared unit panels up to each n's last whole panel, then a per-n stub
    std::vector<MomentResult> out(ns.size());
    PanelAccum acc;
    acc.fine.assign(ns.size(), 0);
    acc.coarse.assign(ns.size(), 0);
    std::vector<double> fine_at_floor(ns.size(), 0), coarse_at_floor(ns.size(), 0);
    long whole = long(std::floor(top));
    for (long u = 0; u < whole; ++u) {
        for (size_t i = 0; i < ns.size(); ++i)
            if (double(u) == std::floor(cuts[i])) {
                fine_at_floor[i] = acc.fine[i];
                coarse_at_floor[i] = acc.coarse[i];
            }
        accumulate_panel(*s, ns, double(u), double(u + 1), acc);
    }
    for (size_t i = 0; i < ns.size(); ++i)
        if (std::floor(cuts[i]) >= whole) {
            fine_at_floor[i] = acc.fine[i];
            coarse_at_floor[i] = acc.coarse[i];
        }
    for (size_t i = 0; i < ns.size(); ++i) {
        double lo = std::floor(cuts[i]);
        PanelAccum stub;
        stub.fine.assign(1, 0);
        stub.coarse.assign(1, 0);
        if (cuts[i] > lo) accumulate_panel(*s, {ns[i]}, lo, cuts[i], stub);
        double value = fine_at_floor[i] + stub.fine[0];
        double coarse = coarse_at_floor[i] + stub.coarse[0];
        out[i] = {ns[i], 0.0, cuts[i], value, std::fabs(value - coarse) + 1e-14 * value,
                  long(lo) + (cuts[i] > lo ? 1 : 0)};
    }
    return out;
}

double default_x_cut(int n) { return n + 40.0 * std::sqrt(double(std::max(n, 1))); }

MomentResult l2_sum(long xi, double x_cut) {
    if (xi < 2) throw std::invalid_argument("need xi >= 2");
    if (!(x_cut > 0)) throw std::invalid_argument("cutoff must be positive");
    std::vector<int> ns(xi + 1);
    for (long n = 0; n <= xi; ++n) ns[n] = int(n);
    auto parts = moment_profile(ns, [&](int) { return x_cut; });
    double value = 0, err = 0;
    long panels = 0;
    for (auto& p : parts) {
        value += p.value;
        err += p.err;
        panels = std::max(panels, p.panels);
    }
    return {xi, 0.0, x_cut, value, err, panels};
}

// ---- histogram and interpolation checks -------------------------------------

std::vector<double> histogram_values(double x0, int n_max) {
    if (!(x0 >= 0)) throw std::invalid_argument("abscissa must be nonnegative");
    if (n_max < 1) throw std::invalid_argument("need at least one index");
    auto s = shared_solver(solver_size_for(std::max(n_max, 8)));
    std::vector<double> f = s->eval(x0);
    std::vector<double> out(n_max);
    for (int n = 1; n <= n_max; ++n) out[n - 1] = std::pow(double(n), 0.25) * f[n];
    return out;
}

double verify_interpolation(double t, const std::vector<double>& x_grid, int n_trunc) {
    if (!(t > 0)) throw std::invalid_argument("Gaussian parameter must be positive");
    double rate = pi_d * std::min(t, 1.0 / t);
    if (n_trunc <= 0) {
        // tail of sum_n G_t(sqrt n): geometric with ratio e^{-rate}
        n_trunc = int(std::ceil((10 * std::log(10.0) + std::log(1 + 1 / std::sqrt(t)) -
                                 std::log1p(-std::exp(-rate))) / rate)) + 4;
        if (n_trunc > 3000) throw std::invalid_argument("Gaussian too flat to truncate");
        if (n_trunc < 20) n_trunc = 20;
    }
    auto G = [&](double x2) {
        return std::exp(-pi_d * t * x2) + std::exp(-pi_d * x2 / t) / std::sqrt(t);
    };
    auto s = shared_solver(solver_size_for(n_trunc));
    double worst = 0;
    for (double x : x_grid) {
        std::vector<double> f = s->eval(x * x);
        double sum = 0;
        for (int n = n_trunc; n >= 0; --n) sum += G(double(n)) * f[n];
        worst = std::max(worst, std::fabs(G(x * x) - sum));
    }
    return worst;
}

}  // namespace sqrtlat
