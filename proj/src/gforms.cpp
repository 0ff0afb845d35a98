#include "gforms.hpp"

#include "cache.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace sqrtlat {

static std::string rat_to_string(const rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

static rational rat_from_string(const std::string& s) {
    return rational(s);
}

static std::vector<rational> solve_q_poly(int n) {
    long order = 4L * n + 16;
    const BasicExpansions& e = q_expansions(order);
    HalfIntSeries th3 = e.theta.pow(3);

    std::vector<rational> b(n + 1);
    // acc tracks the expansion of the partial combination; only exponents
    // <= 0 matter for the matching conditions
    HalfIntSeries acc(1);
    HalfIntSeries p = th3;  // theta^3 J^j
    std::vector<HalfIntSeries> pows;
    pows.reserve(n + 1);
    pows.push_back(p);
    for (int j = 1; j <= n; ++j) {
        p = p * e.J;
        pows.push_back(p);
    }
    for (int j = n; j >= 0; --j) {
        rational target = (j == n) ? 1 : 0;
        b[j] = target - acc.coeff(-4L * j);
        if (b[j] != 0) acc += pows[j] * b[j];
    }
    return b;
}

const std::vector<rational>& q_poly(int n) {
    if (n < 0) throw std::invalid_argument("negative index");
    static std::shared_mutex mtx;
    static std::map<int, std::vector<rational>> cache;
    {
        std::shared_lock lk(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    std::string fname = "q_poly_" + std::to_string(n) + ".json";
    std::vector<rational> coeffs;
    if (auto j = cache_load(fname); j && (*j)["n"] == n) {
        for (auto& s : (*j)["coeffs"]) coeffs.push_back(rat_from_string(s.get<std::string>()));
    }
    if (coeffs.size() != size_t(n) + 1) {
        coeffs = solve_q_poly(n);
        nlohmann::json out;
        out["n"] = n;
        out["coeffs"] = nlohmann::json::array();
        for (auto& q : coeffs) out["coeffs"].push_back(rat_to_string(q));
        cache_store(fname, out);
    }
    std::unique_lock lk(mtx);
    return cache.emplace(n, std::move(coeffs)).first->second;
}

HalfIntSeries g_expansion(int n, long order) {
    if (n < 0) throw std::invalid_argument("negative index");
    if (order <= -4L * n) throw std::invalid_argument("order below the leading exponent");
    const std::vector<rational>& b = q_poly(n);
    const BasicExpansions& e = q_expansions(order + 4L * n + 16);
    HalfIntSeries acc(e.J.order());
    acc.set(0, b[n]);
    for (int j = n - 1; j >= 0; --j) {
        acc = acc * e.J;
        acc.set(0, acc.coeff(0) + b[j]);
    }
    HalfIntSeries g = e.theta.pow(3) * acc;
    g.truncate(order);
    return g;
}

mpcomplex q_poly_value(int n, const mpcomplex& J) {
    const std::vector<rational>& q = q_poly(n);
    unsigned out_digits = mpreal::default_precision();
    unsigned bits = unsigned(out_digits / 0.30103) + unsigned(15.1 * n) + 64;
    mpreal re_out(0), im_out(0);
    {
        PrecisionGuard guard(bits);
        mpcomplex acc(to_real<mpreal>(q[n]), mpreal(0));
        for (int j = n - 1; j >= 0; --j) {
            acc *= J;
            acc.re += to_real<mpreal>(q[j]);
        }
        re_out = mpreal(acc.re, out_digits);
        im_out = mpreal(acc.im, out_digits);
    }
    return {re_out, im_out};
}

std::complex<double> q_poly_value(int n, std::complex<double> J) {
    PrecisionGuard guard(64);
    return q_poly_value(n, mpcomplex(J)).to_double();
}

std::vector<rational> g_cusp1_coefficients(int m, int count) {
    if (m < 0 || count < 0) throw std::invalid_argument("negative argument");
    if (count == 0) return {};
    long order = 8L * count + 16;
    const BasicExpansions& e = q_expansions(order);
    // the Hauptmodul in the local coordinate at the cusp 1: -16 lambda^2/(1-lambda)
    HalfIntSeries X = (e.lambda * e.lambda) *
                      (HalfIntSeries::one(order) - e.lambda).reciprocal() * rational(-16);
    const std::vector<rational>& b = q_poly(m);
    HalfIntSeries acc(order);
    acc.set(0, b[m]);
    for (int j = m - 1; j >= 0; --j) {
        acc = acc * X;
        acc.truncate(order);
        acc.set(0, acc.coeff(0) + b[j]);
    }
    HalfIntSeries g1 = e.theta2.pow(3) * acc;
    std::vector<rational> out;
    out.reserve(count);
    for (int nu = 0; nu < count; ++nu) out.push_back(g1.coeff(8L * nu + 3));
    return out;
}

}  // namespace sqrtlat
