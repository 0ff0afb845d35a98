#include "modular.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace sqrtlat {

static BasicExpansions build_expansions(long order) {
    if (order < 16) throw std::invalid_argument("expansion order too small");
    long work = order + 16;

    HalfIntSeries th(work);
    th.set(0, 1);
    for (long n = 1; 4 * n * n < work; ++n) th.set(4 * n * n, 2);

    HalfIntSeries th2(work);
    for (long k = 0; (2 * k + 1) * (2 * k + 1) < work; ++k)
        th2.set((2 * k + 1) * (2 * k + 1), 2);

    HalfIntSeries lam = th2.pow(4) * th.pow(4).reciprocal();
    HalfIntSeries J = (lam * (HalfIntSeries::one(work) - lam)).reciprocal() * rational(16);

    BasicExpansions e{th, th2, lam, J};
    e.theta.truncate(order);
    e.theta2.truncate(order);
    e.lambda.truncate(order);
    e.J.truncate(order);
    return e;
}

const BasicExpansions& q_expansions(long order) {
    static std::shared_mutex mtx;
    static std::map<long, BasicExpansions> cache;
    {
        std::shared_lock lk(mtx);
        auto it = cache.find(order);
        if (it != cache.end()) return it->second;
    }
    BasicExpansions e = build_expansions(order);
    std::unique_lock lk(mtx);
    return cache.emplace(order, std::move(e)).first->second;
}

}  // namespace sqrtlat
