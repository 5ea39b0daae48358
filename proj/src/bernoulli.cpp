#include "mzeta/bernoulli.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <utility>

#include "mzeta/combinatorics.hpp"
#include "mzeta/error.hpp"
#include "mzeta/laurent_series.hpp"

namespace mzeta {

BigRational bernoulli_number(unsigned n) {
    return series_of_b(static_cast<int>(n)).coefficient(static_cast<int>(n)) * BigRational(factorial(n));
}

std::vector<BigRational> bernoulli_numbers(unsigned n) {
    const LaurentSeries b = series_of_b(static_cast<int>(n));
    std::vector<BigRational> out(n + 1);
    BigInt fact(1);
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) fact *= BigInt(k);
        out[k] = b.coefficient(static_cast<int>(k)) * BigRational(fact);
    }
    return out;
}

RationalPoly bernoulli_poly(unsigned n) {
    const std::vector<BigRational> B = bernoulli_numbers(n);
    std::vector<BigRational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) c[n - k] = BigRational(binomial(n, k)) * B[k];
    return RationalPoly(std::move(c));
}

namespace {

struct NorlundCache {
    std::shared_mutex mutex;
    std::map<std::pair<unsigned, unsigned>, RationalPoly> polys;
};

NorlundCache& norlund_cache() {
    static NorlundCache cache;
    return cache;
}

}  // namespace

RationalPoly norlund_poly(unsigned m, unsigned order) {
    NorlundCache& cache = norlund_cache();
    const auto key = std::make_pair(m, order);
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.polys.find(key); it != cache.polys.end()) return it->second;
    }
    // [t^m] b(t)^order e^{xt} = sum_j [t^{m-j}] b^order * x^j / j!
    const LaurentSeries bn = pow(series_of_b(static_cast<int>(m)), static_cast<int>(order));
    std::vector<BigRational> c(m + 1);
    const BigRational mfact(factorial(m));
    for (unsigned j = 0; j <= m; ++j)
        c[j] = bn.coefficient(static_cast<int>(m - j)) * mfact / BigRational(factorial(j));
    RationalPoly p(std::move(c));
    std::unique_lock lock(cache.mutex);
    cache.polys.emplace(key, p);
    return p;
}

BigRational norlund_number(unsigned m, unsigned order) { return norlund_poly(m, order).coefficient(0); }

RationalPoly umbral_power(std::span<const unsigned> ms, unsigned n) {
    if (ms.empty()) raise(ErrorKind::InvalidArgument, "umbral power needs at least one index");
    RationalPoly total;
    for_each_composition(n, ms.size(), [&](std::span<const unsigned> ks) {
        RationalPoly term = RationalPoly::constant(BigRational(multinomial(n, ks)));
        for (std::size_t i = 0; i < ms.size(); ++i) term *= bernoulli_poly(ms[i] + ks[i]);
        total += term;
    });
    return total;
}

RationalPoly shifted_umbral_power(std::span<const unsigned> ms, unsigned n) {
    if (ms.empty()) raise(ErrorKind::InvalidArgument, "umbral power needs at least one index");
    const unsigned msum = std::accumulate(ms.begin(), ms.end(), 0U);
    const std::vector<BigRational> B = bernoulli_numbers(msum + n);
    std::vector<BigRational> c(n + 1);
    // Last part of each composition is the power of x.
    for_each_composition(n, ms.size() + 1, [&](std::span<const unsigned> ks) {
        BigRational term(multinomial(n, ks));
        for (std::size_t i = 0; i < ms.size(); ++i) term *= B[ms[i] + ks[i]];
        c[ks[ms.size()]] += term;
    });
    RationalPoly p(std::move(c));
    if (msum % 2 == 1) p = -p;
    return p;
}

}  // namespace mzeta
