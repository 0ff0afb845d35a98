#include "contour.hpp"

#include "config.hpp"
#include "gforms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sqrtlat {

namespace {

const double pi_d = 3.14159265358979323846;
const double ln2 = 0.69314718055994530942;

// quadrature precision for f_n(z) = (1/2) int_{-1}^{1} g_n(w) e^{pi i w z} dw
// along the upper unit semicircle: the integrand peaks around e^{pi n + pi|z|}
// while the result can be as small as e^{-2 pi sqrt(n |z|)}, so the budget
// covers both the cancellation and the output digits
unsigned auto_bits(int n, double z_scale) {
    double nats = pi_d * n + 2 * pi_d * std::sqrt(double(n) * z_scale) + pi_d * z_scale;
    return 192 + unsigned(nats / ln2);
}

}  // namespace

void gauss_legendre(int k, std::vector<mpreal>& nodes, std::vector<mpreal>& weights) {
    if (k < 1) throw std::invalid_argument("rule order must be positive");
    static std::mutex mtx;
    static std::map<std::pair<int, unsigned>, std::pair<std::vector<mpreal>, std::vector<mpreal>>> pool;
    unsigned digits = mpreal::default_precision();
    {
        std::lock_guard lk(mtx);
        auto it = pool.find({k, digits});
        if (it != pool.end()) {
            nodes = it->second.first;
            weights = it->second.second;
            return;
        }
    }
    nodes.assign(k, 0);
    weights.assign(k, 0);
    mpreal tol = pow(mpreal(10), -long(digits) + 2);
    for (int i = 0; i < (k + 1) / 2; ++i) {
        // Newton from the Chebyshev-like seed; P_k and P'_k by recurrence
        mpreal x = cos(mp_pi() * (i + 0.75) / (k + 0.5));
        mpreal dp;
        for (int iter = 0; iter < 200; ++iter) {
            mpreal p0 = 1, p1 = x;
            for (int j = 2; j <= k; ++j) {
                mpreal p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = k * (x * p1 - p0) / (x * x - 1);
            mpreal step = p1 / dp;
            x -= step;
            if (abs(step) < tol) break;
        }
        mpreal w = 2 / ((1 - x * x) * dp * dp);
        nodes[i] = x;
        nodes[k - 1 - i] = -x;
        weights[i] = w;
        weights[k - 1 - i] = w;
    }
    std::lock_guard lk(mtx);
    pool[{k, digits}] = {nodes, weights};
}

ContourEvaluator::ContourEvaluator(int n, int bits, double z_scale, double panel_scale)
    : n_(n) {
    if (n < 0) throw std::invalid_argument("negative index");
    if (z_scale <= 0) z_scale = std::max(4.0, double(n));
    bits_ = bits > 0 ? unsigned(bits) : auto_bits(n, z_scale);
    if (bits_ < 64) bits_ = 64;

    // near the cusps the integrand decays like e^{-(3 pi/4) cot(theta/2)};
    // cut the arc where that drop exceeds the full precision budget
    double drop = (bits_ * ln2 + pi_d * (z_scale + std::sqrt(3.0 * n)) + 40) / (0.75 * pi_d);
    double theta_cut = 2 * std::atan(1.0 / drop);
    double arc = pi_d - 2 * theta_cut;

    double total_rads = (pi_d * n / 2 + pi_d * z_scale + 5) * arc;
    int panels = std::max(2, int(std::ceil(total_rads / 20.0 * panel_scale)));
    double rp = total_rads / panels;  // oscillation per panel

    // smallest order whose plane-wave quadrature error clears the budget
    double target = 0.75 * bits_ + 50;
    int order = std::max(6, int(rp));
    while (order < 4000) {
        double ratio = 8.0 * order / (2.718281828 * rp + 1e-9);
        if (ratio > 1.3 && 2.0 * order * std::log2(ratio) > target) break;
        ++order;
    }

    PrecisionGuard guard(bits_);
    q_poly(n);  // warm the coefficient cache before the parallel fill
    std::vector<mpreal> gl_x, gl_w;
    gauss_legendre(order, gl_x, gl_w);

    size_t count = size_t(panels) * order;
    w_.resize(count);
    u_.resize(count);
    unsigned node_bits = bits_;
    // the panel contributions cancel against each other by a factor of order
    // e^{pi n}, so nodes and weights must stay at full precision throughout;
    // rounding the rule to double caps the whole integral at 1e-16 relative
    parallel_for(long(count), [&](long idx) {
        PrecisionGuard g(node_bits);
        int p = int(idx / order), q = int(idx % order);
        mpreal hw = (mp_pi() - 2 * mpreal(theta_cut)) / (2 * panels);
        mpreal theta = mpreal(theta_cut) + hw * (2 * p + 1 + gl_x[q]);
        mpcomplex w = polar_mp(mpreal(1), theta);
        mpcomplex g_val = g_eval<mpcomplex>(n, w);
        // dz = i w dtheta and the (1/2) prefactor, traversed from -1 to 1,
        // i.e. theta decreasing: the sign flip folds into the weight
        mpcomplex u = mpcomplex(0.0, -0.5) * ((hw * gl_w[q]) * (w * g_val));
        w_[idx] = w;
        u_[idx] = u;
    });
}

std::complex<double> ContourEvaluator::operator()(std::complex<double> z) const {
    PrecisionGuard guard(bits_);
    mpcomplex ipiz(-pi_d * z.imag(), pi_d * z.real());  // i pi z
    mpcomplex sum(0.0);
    for (size_t j = 0; j < w_.size(); ++j) sum += u_[j] * exp(ipiz * w_[j]);
    return sum.to_double();
}

void ContourEvaluator::segment_sums(std::complex<double> z0, std::complex<double> z1,
                                    int m, std::vector<mpcomplex>& sums) const {
    if (m < 1) throw std::invalid_argument("need at least one step");
    std::complex<double> dz = (z1 - z0) / double(m);
    mpcomplex ipiz0(-pi_d * z0.imag(), pi_d * z0.real());
    mpcomplex ipidz(-pi_d * dz.imag(), pi_d * dz.real());
    size_t count = w_.size();
    std::vector<mpcomplex> B(count), S(count);
    for (size_t j = 0; j < count; ++j) {
        B[j] = u_[j] * exp(ipiz0 * w_[j]);
        S[j] = exp(ipidz * w_[j]);
    }
    sums.resize(m + 1);
    for (int t = 0; t <= m; ++t) {
        mpcomplex acc(0.0);
        for (size_t j = 0; j < count; ++j) {
            acc += B[j];
            if (t < m) B[j] *= S[j];
        }
        sums[t] = acc;
    }
}

void ContourEvaluator::eval_segment(std::complex<double> z0, std::complex<double> z1,
                                    int m, std::vector<std::complex<double>>& out) const {
    PrecisionGuard guard(bits_);
    std::vector<mpcomplex> sums;
    segment_sums(z0, z1, m, sums);
    // rescale by a common positive constant before narrowing so huge batches
    // survive the trip to double; argument tracking is scale-invariant
    mpreal peak(0);
    for (auto& s : sums) {
        mpreal m(std::max(mpreal(abs(s.re)), mpreal(abs(s.im))));
        if (m > peak) peak = m;
    }
    out.resize(m + 1);
    if (peak > mpreal(1e250)) {
        for (int t = 0; t <= m; ++t) out[t] = (sums[t] / peak).to_double();
    } else {
        for (int t = 0; t <= m; ++t) out[t] = sums[t].to_double();
    }
}

void ContourEvaluator::eval_segment_unit(std::complex<double> z0, std::complex<double> z1,
                                         int m, std::vector<std::complex<double>>& phase,
                                         std::vector<double>& logmag) const {
    PrecisionGuard guard(bits_);
    std::vector<mpcomplex> sums;
    segment_sums(z0, z1, m, sums);
    phase.resize(m + 1);
    logmag.resize(m + 1);
    for (int t = 0; t <= m; ++t) {
        mpreal a = abs(sums[t]);
        if (a > 0) {
            phase[t] = (sums[t] / a).to_double();
            logmag[t] = log(a).convert_to<double>();
        } else {
            phase[t] = {0, 0};
            logmag[t] = -1e300;
        }
    }
}

ContourResult eval_contour(int n, std::complex<double> z, int precision_bits, double tol) {
    unsigned cap = unsigned(std::max(256, config().precision_cap_bits));
    unsigned bits = precision_bits > 0 ? unsigned(precision_bits) : auto_bits(n, std::abs(z));
    double scale = std::max(std::abs(z), 1.0);
    std::complex<double> prev;
    bool have_prev = false;
    double panel_scale = 1.0;
    for (int round = 0; round < 12; ++round) {
        ContourEvaluator ev(n, int(std::min(bits, cap)), scale, panel_scale);
        std::complex<double> v = ev(z);
        if (have_prev) {
            double err = std::abs(v - prev);
            double rel = err / std::max(std::abs(v), 1e-300);
            if (rel < tol || err < tol) return {v, err, true};
            if (bits >= cap) return {v, err, false};
        }
        prev = v;
        have_prev = true;
        bits = std::min(cap, unsigned(bits * 3 / 2));
        panel_scale *= 1.3;
    }
    return {prev, std::abs(prev), false};
}

}  // namespace sqrtlat
