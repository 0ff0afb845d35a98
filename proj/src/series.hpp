#pragma once

#include "num.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <map>
#include <stdexcept>

namespace sqrtlat {

using rational = boost::multiprecision::mpq_rational;

template <class R>
R to_real(const rational& q);

template <>
inline double to_real<double>(const rational& q) {
    return q.convert_to<double>();
}

template <>
inline mpreal to_real<mpreal>(const rational& q) {
    return mpreal(numerator(q)) / mpreal(denominator(q));
}

// Truncated q-expansion with exponents in (1/8)Z. A coefficient at map key k
// means the term c * q^(k/8); all exponents k < order are represented (absent
// keys are zero), exponents >= order are truncated away.
class HalfIntSeries {
public:
    static constexpr int denom = 8;

    HalfIntSeries() : order_(0) {}
    explicit HalfIntSeries(long order) : order_(order) {}

    long order() const { return order_; }
    const std::map<long, rational>& terms() const { return c_; }

    rational coeff(long k) const {
        if (k >= order_) throw std::out_of_range("coefficient beyond truncation order");
        auto it = c_.find(k);
        return it == c_.end() ? rational(0) : it->second;
    }

    void set(long k, const rational& v) {
        if (k >= order_) return;
        if (v == 0) c_.erase(k);
        else c_[k] = v;
    }

    long lowest() const {
        return c_.empty() ? order_ : c_.begin()->first;
    }

    bool is_zero() const { return c_.empty(); }

    HalfIntSeries& operator+=(const HalfIntSeries& o) {
        order_ = std::min(order_, o.order_);
        for (auto& [k, v] : o.c_) {
            if (k >= order_) break;
            auto it = c_.find(k);
            if (it == c_.end()) c_.emplace(k, v);
            else {
                it->second += v;
                if (it->second == 0) c_.erase(it);
            }
        }
        truncate(order_);
        return *this;
    }

    HalfIntSeries operator+(const HalfIntSeries& o) const {
        HalfIntSeries r = *this;
        r += o;
        return r;
    }

    HalfIntSeries operator-() const {
        HalfIntSeries r = *this;
        for (auto& [k, v] : r.c_) v = -v;
        return r;
    }

    HalfIntSeries operator-(const HalfIntSeries& o) const { return *this + (-o); }

    HalfIntSeries operator*(const HalfIntSeries& o) const {
        // truncation order of the product: a term of one factor at its order
        // bound pairs with the other factor's lowest exponent
        long ord = std::min(order_ + o.lowest(), o.order_ + lowest());
        HalfIntSeries r(ord);
        for (auto& [ka, va] : c_) {
            for (auto& [kb, vb] : o.c_) {
                long k = ka + kb;
                if (k >= ord) break;
                auto it = r.c_.find(k);
                if (it == r.c_.end()) r.c_.emplace(k, va * vb);
                else it->second += va * vb;
            }
        }
        for (auto it = r.c_.begin(); it != r.c_.end();) {
            if (it->second == 0) it = r.c_.erase(it);
            else ++it;
        }
        return r;
    }

    HalfIntSeries operator*(const rational& s) const {
        HalfIntSeries r(order_);
        if (s == 0) return r;
        r.c_ = c_;
        for (auto& [k, v] : r.c_) v *= s;
        return r;
    }

    HalfIntSeries pow(unsigned e) const {
        HalfIntSeries r = one(e == 0 ? order_ : order_ + long(e - 1) * lowest());
        HalfIntSeries base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    // Multiplicative inverse; requires a nonzero leading coefficient.
    HalfIntSeries reciprocal() const {
        if (c_.empty()) throw std::domain_error("reciprocal of zero series");
        long k0 = lowest();
        rational c0 = c_.begin()->second;
        // u = series / (c0 q^{k0/8}) - 1, with positive leading exponent
        HalfIntSeries u(order_ - k0);
        for (auto& [k, v] : c_) {
            if (k == k0) continue;
            u.set(k - k0, v / c0);
        }
        // inverse = (1/c0) q^{-k0/8} * sum (-u)^j
        HalfIntSeries acc = one(order_ - k0);
        HalfIntSeries p = one(order_ - k0);
        long step = u.is_zero() ? order_ - k0 : u.lowest();
        if (step <= 0) throw std::domain_error("series reciprocal needs positive-exponent tail");
        for (long got = 0; got < order_ - k0; got += step) {
            p = p * (-u);
            if (p.is_zero()) break;
            acc += p;
        }
        HalfIntSeries r(order_ - 2 * k0);
        for (auto& [k, v] : acc.c_) r.set(k - k0, v / c0);
        return r;
    }

    void truncate(long new_order) {
        order_ = std::min(order_, new_order);
        c_.erase(c_.lower_bound(order_), c_.end());
    }

    static HalfIntSeries one(long order) {
        HalfIntSeries r(order);
        r.set(0, 1);
        return r;
    }

private:
    long order_;
    std::map<long, rational> c_;
};

}  // namespace sqrtlat
