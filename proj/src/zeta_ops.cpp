#include "mzeta/zeta_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "mzeta/bernoulli.hpp"
#include "mzeta/combinatorics.hpp"
#include "mzeta/error.hpp"

namespace mzeta {

namespace {

long double to_ld(const BigRational& q) { return q.to_long_double(); }

bool series_valid(unsigned n, Complex s) { return s.real() > n + 1.0L; }

}  // namespace

Evaluation multi_zeta_eval(unsigned n, Complex s, long double x, ZetaRoute route, const EvalParams& params) {
    if (route == ZetaRoute::Auto) route = series_valid(n, s) ? ZetaRoute::Series : ZetaRoute::Reduction;
    if (route == ZetaRoute::Series) return multi_hurwitz_series_eval(n, s, x);
    return multi_hurwitz_eval(n, s, x, params);
}

Complex pochhammer(Complex s, unsigned k) {
    Complex p = 1;
    for (unsigned i = 0; i < k; ++i) p *= s + static_cast<long double>(i);
    return p;
}

Complex Z_single_hurwitz(unsigned m, Complex s, long double x, const EvalParams& params) {
    Complex total = 0;
    long double xp = 1;  // x^{m-k}, built from k = m downwards
    for (unsigned k = m + 1; k-- > 0;) {
        const long double c = sign_pow(k) * to_ld(BigRational(binomial(m, k))) * xp;
        total += c * hurwitz_zeta(s - static_cast<long double>(k), x, params);
        xp *= x;
    }
    return total;
}

Complex Z_single_multizeta(unsigned m, Complex s, long double x, ZetaRoute route, const EvalParams& params) {
    Complex total = 0;
    for (unsigned k = 1; k <= m + 1; ++k) {
        const BigRational c = BigRational(sign_pow(k - 1)) * BigRational(factorial(k - 1)) * BigRational(stirling2(m + 1, k));
        total += to_ld(c) * multi_zeta(k, s, x, route, params);
    }
    return total;
}

std::pair<Complex, Complex> Zhat_sides(unsigned m, Complex s, long double x, Variant v, ZetaRoute route,
                                       const EvalParams& params) {
    Complex lhs = 0;
    for (unsigned k = 1; k <= m + 1; ++k) {
        const long double fk = to_ld(BigRational(factorial(k - 1)));
        const long double s_next = to_ld(BigRational(stirling2(m + 1, k)));
        const long double s_same = m * to_ld(BigRational(stirling2(m, k)));
        Complex term = s * s_next * multi_zeta(k, s + 1.0L, x, route, params);
        if (s_same != 0) {
            const Complex z = multi_zeta(k, s, x, route, params);
            term += v == Variant::Corrected ? s_same * z : -s_same * z;
        }
        lhs += (v == Variant::Corrected ? sign_pow(k - 1) : 1) * fk * term;
    }
    if (v == Variant::AsPrinted && m % 2 == 1) lhs = -lhs;

    if (v == Variant::AsPrinted && m == 0) raise(ErrorKind::Domain, "zeta(s, m) needs a positive second argument");
    const long double a = v == Variant::Corrected ? x : static_cast<long double>(m);
    Complex rhs = 0;
    for (unsigned k = 0; k <= m; ++k) {
        const long double c = sign_pow(k) * to_ld(BigRational(binomial(m, k))) * std::pow(x, static_cast<long double>(m - k));
        const Complex sk = s - static_cast<long double>(k);
        rhs += c * sk * hurwitz_zeta(sk + 1.0L, a, params);
    }
    return {lhs, rhs};
}

LaurentSeries ReducedForm::evaluate(int K) const {
    unsigned max_power = 1;
    for (const Term& t : terms) max_power = std::max(max_power, t.J);
    const LaurentSeries F = series_of_F(K + static_cast<int>(max_power));
    LaurentSeries sum = LaurentSeries::zero();
    for (const Term& t : terms) sum += shift(pow(F, static_cast<int>(t.J)), static_cast<int>(t.a)) * t.coeff;
    return sum.truncated(K);
}

namespace {

struct ReduceCache {
    std::shared_mutex mutex;
    std::map<std::vector<unsigned>, ReducedForm> forms;
};

ReduceCache& reduce_cache() {
    static ReduceCache cache;
    return cache;
}

}  // namespace

ReducedForm reduce_multi(std::span<const unsigned> ms) {
    if (ms.empty()) raise(ErrorKind::InvalidArgument, "index vector must be nonempty");
    std::vector<unsigned> key(ms.begin(), ms.end());
    ReduceCache& cache = reduce_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.forms.find(key); it != cache.forms.end()) return it->second;
    }
    std::map<std::pair<unsigned, unsigned>, BigRational> acc{{{0U, 0U}, BigRational(1)}};
    for (unsigned m : ms) {
        const FTermExpansion e = expand_G_derivative(m);
        std::map<std::pair<unsigned, unsigned>, BigRational> next;
        for (const auto& [key2, c] : acc)
            for (const auto& t : e.terms)
                next[{key2.first + static_cast<unsigned>(t.t_power), key2.second + static_cast<unsigned>(t.f_power)}].add_product(c, t.coeff);
        acc = std::move(next);
    }
    ReducedForm form;
    for (const auto& [k, c] : acc)
        if (!c.is_zero()) form.terms.push_back({c, k.first, k.second});
    std::unique_lock lock(cache.mutex);
    cache.forms.emplace(std::move(key), form);
    return form;
}

namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();

// Per t-power a: W_a(k) = sum_J coeff C(k+J-1, J-1), so that
// Z(s,x) = sum_k sum_a (s)_a W_a(k) (x+k)^{-s-a}. Summing the weights exactly first
// removes the cancellation between the zeta_J terms.
struct DirectForm {
    std::vector<unsigned> as;
    std::vector<RationalPoly> weights;  // in k
};

DirectForm direct_form(const ReducedForm& form) {
    std::map<unsigned, RationalPoly> by_a;
    for (const auto& t : form.terms) {
        RationalPoly c = RationalPoly::constant(t.coeff / BigRational(factorial(t.J - 1)));
        for (unsigned i = 1; i < t.J; ++i) c *= RationalPoly({BigRational(i), BigRational(1)});
        by_a[t.a] += c;
    }
    DirectForm d;
    for (auto& [a, w] : by_a) {
        if (w.is_zero()) continue;
        d.as.push_back(a);
        d.weights.push_back(std::move(w));
    }
    return d;
}

bool direct_valid(const DirectForm& d, Complex s) {
    for (std::size_t i = 0; i < d.as.size(); ++i)
        if (!(s.real() + d.as[i] > d.weights[i].degree() + 1.0L)) return false;
    return true;
}

Complex cpow_neg(long double u, Complex e) { return std::exp(-e * std::log(u)); }

Evaluation Z_multi_direct(const DirectForm& d, Complex s, long double x, long double tol) {
    if (!direct_valid(d, s)) raise(ErrorKind::DivergentRegion, "direct series needs Re(s) + a > deg W_a + 1");
    // Tail polynomials in y = x + k.
    const BigRational xq = BigRational::from_long_double(x);
    const RationalPoly y_minus_x({-xq, BigRational(1)});
    std::vector<std::vector<Complex>> tail_polys;
    std::vector<Complex> poch;
    for (std::size_t i = 0; i < d.as.size(); ++i) {
        const auto& c = d.weights[i].coeffs();
        RationalPoly shifted;
        for (std::size_t j = c.size(); j-- > 0;) shifted = shifted * y_minus_x + RationalPoly::constant(c[j]);
        poch.push_back(pochhammer(s, d.as[i]));
        std::vector<Complex> p;
        for (const auto& q : shifted.coeffs()) p.push_back(poch.back() * to_ld(q));
        tail_polys.push_back(std::move(p));
    }

    unsigned K = std::max(32U, static_cast<unsigned>(std::ceil(2 * std::abs(s))));
    Complex head = 0;
    long double magnitude = 0;  // sum of |terms|, for the rounding estimate
    unsigned done = 0;
    while (true) {
        for (; done < K; ++done) {
            const BigRational kq(done);
            for (std::size_t i = 0; i < d.as.size(); ++i) {
                const long double w = to_ld(d.weights[i](kq));
                if (w == 0) continue;
                const Complex term = poch[i] * w * cpow_neg(x + done, s + static_cast<long double>(d.as[i]));
                head += term;
                magnitude += std::abs(term);
            }
        }
        Complex tail = 0;
        long double tail_bound = 0;
        for (std::size_t i = 0; i < d.as.size(); ++i) {
            const Evaluation t = power_sum_tail(tail_polys[i], s + static_cast<long double>(d.as[i]), x, K);
            tail += t.value;
            tail_bound += t.error_bound;
            magnitude += std::abs(t.value);
        }
        const Complex value = head + tail;
        if (tail_bound <= tol * std::abs(value) || K >= (1U << 20))
            return {value, tail_bound + 8 * kEps * magnitude, K, 15};
        K *= 2;
    }
}

}  // namespace

Evaluation multi_zeta_combination(const std::vector<std::pair<BigRational, unsigned>>& terms, Complex s, long double x,
                                  const EvalParams& params) {
    if (!(x > 0)) raise(ErrorKind::Domain, "x must be positive");
    ReducedForm form;
    for (const auto& [c, J] : terms) {
        if (J == 0) raise(ErrorKind::InvalidArgument, "order J must be positive");
        form.terms.push_back({c, 0, J});
    }
    return Z_multi_direct(direct_form(form), s, x, params.tol);
}

Evaluation Z_multi_eval(std::span<const unsigned> ms, Complex s, long double x, ZetaRoute route, const EvalParams& params) {
    const ReducedForm form = reduce_multi(ms);
    if (!(x > 0)) raise(ErrorKind::Domain, "x must be positive");
    if (route != ZetaRoute::Reduction) {
        const DirectForm d = direct_form(form);
        if (route == ZetaRoute::Series || direct_valid(d, s)) return Z_multi_direct(d, s, x, params.tol);
    }
    Evaluation total{0, 0, 0, params.J};
    long double magnitude = 0;
    for (const auto& t : form.terms) {
        const Complex w = to_ld(t.coeff) * pochhammer(s, t.a);
        const Evaluation z = multi_zeta_eval(t.J, s + static_cast<long double>(t.a), x, ZetaRoute::Reduction, params);
        total.value += w * z.value;
        total.error_bound += std::abs(w) * z.error_bound;
        magnitude += std::abs(w * z.value);
        total.N = std::max(total.N, z.N);
    }
    total.error_bound += 8 * kEps * magnitude;
    return total;
}

namespace {

constexpr long double kSwitch = 0.5L;
constexpr int kTaylorOrder = 48;

// Taylor coefficients of G^{(m)} about 0, converted once.
const std::vector<long double>& G_taylor(unsigned m) {
    static std::shared_mutex mutex;
    static std::map<unsigned, std::vector<long double>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    const LaurentSeries d = derivative(series_of_G(kTaylorOrder + static_cast<int>(m)), m);
    std::vector<long double> c(kTaylorOrder + 1);
    for (int k = 0; k <= kTaylorOrder; ++k) c[static_cast<std::size_t>(k)] = to_ld(d.coefficient(k));
    std::unique_lock lock(mutex);
    return cache.emplace(m, std::move(c)).first->second;
}

struct NumericTerm {
    long double coeff;
    int t_power;
    int f_power;
};

const std::vector<NumericTerm>& G_terms(unsigned m) {
    static std::shared_mutex mutex;
    static std::map<unsigned, std::vector<NumericTerm>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    std::vector<NumericTerm> terms;
    for (const auto& t : expand_G_derivative(m).terms) terms.push_back({to_ld(t.coeff), t.t_power, t.f_power});
    std::unique_lock lock(mutex);
    return cache.emplace(m, std::move(terms)).first->second;
}

// sup over t >= 1 of |G^{(m)}(t)| / t, from the F-power form with F(t) <= F(1).
long double G_growth_constant(unsigned m) {
    const long double F1 = 1.0L / -std::expm1(-1.0L);
    long double c = 0;
    for (const auto& t : G_terms(m)) c += std::fabs(t.coeff) * std::pow(F1, static_cast<long double>(t.f_power));
    return c;
}

}  // namespace

long double G_derivative(unsigned m, long double t) {
    if (t < kSwitch) {
        const auto& c = G_taylor(m);
        long double r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
        return r;
    }
    const long double F = 1.0L / -std::expm1(-t);
    long double r = 0;
    for (const auto& term : G_terms(m)) {
        long double v = term.coeff * std::pow(F, static_cast<long double>(term.f_power));
        if (term.t_power) v *= t;
        r += v;
    }
    return r;
}

QuadratureResult Z_multi_quadrature(std::span<const unsigned> ms, long double s, long double x, long double tol) {
    if (ms.empty()) raise(ErrorKind::InvalidArgument, "index vector must be nonempty");
    if (!(s > 0) || !(x > 0)) raise(ErrorKind::Domain, "quadrature needs real s > 0 and x > 0");
    const unsigned d = static_cast<unsigned>(ms.size());

    // |prod G^{(m_i)}(t)| <= C t^d for t >= 1, so the tail past T is at most
    // C x^{-(s+d)} Gamma(s+d, xT).
    long double C = 1;
    for (unsigned m : ms) C *= G_growth_constant(m);
    const long double lg = std::lgamma(s);
    const auto tail_bound = [&](long double T) {
        return C * std::exp(std::lgamma(s + d) - (s + d) * std::log(x) - lg) * boost::math::gamma_q(s + d, x * T);
    };

    const auto integrand = [&](long double t) -> long double {
        if (t <= 0) return 0.0L;
        long double g = 1;
        for (unsigned m : ms) g *= G_derivative(m, t);
        return g * std::exp((s - 1) * std::log(t) - x * t - lg);
    };

    long double T = std::max(8.0L, 2 * (s + d) / x);
    while (tail_bound(T) > 1e-3L * tol && T < 1e5L) T *= 1.5L;
    const long double tail = tail_bound(T);

    boost::math::quadrature::tanh_sinh<long double> integrator;
    long double err = 0, l1 = 0;
    long double value = 0;
    try {
        value = integrator.integrate(integrand, 0.0L, T, std::sqrt(std::numeric_limits<long double>::epsilon()), &err, &l1);
    } catch (const std::exception& e) {
        raise(ErrorKind::QuadratureFailure, std::string("quadrature failed: ") + e.what());
    }
    const long double total_err = err + tail;
    if (!std::isfinite(value) || total_err > tol * std::max(std::fabs(value), 1e-30L))
        raise(ErrorKind::QuadratureFailure, "quadrature did not reach the requested tolerance");
    return {value, total_err};
}

BigRational pochhammer_zeta_at_nonpositive(unsigned a, unsigned J, unsigned N, const BigRational& x) {
    const long top = static_cast<long>(N) - static_cast<long>(a) + static_cast<long>(J);
    if (top < 0) return BigRational(0);
    const auto deg = static_cast<unsigned>(top);
    return BigRational(sign_pow(static_cast<long>(J) - static_cast<long>(a))) * BigRational(factorial(N)) /
           BigRational(factorial(deg)) * norlund_poly(deg, J)(x);
}

RationalPoly Z_multi_neg(std::span<const unsigned> ms, unsigned n) { return shifted_umbral_power(ms, n); }

BigRational Z_multi_neg_series(std::span<const unsigned> ms, unsigned n, const BigRational& x) {
    if (ms.empty()) raise(ErrorKind::InvalidArgument, "index vector must be nonempty");
    const int K = static_cast<int>(n);
    LaurentSeries prod = exp_series(-x, K);
    for (unsigned m : ms) {
        const LaurentSeries g = derivative(series_of_G(K + static_cast<int>(m)), m).truncated(K);
        prod = mul(prod, g);
    }
    return BigRational(sign_pow(n)) * BigRational(factorial(n)) * prod.coefficient(K);
}

BigRational Z_multi_neg_reduced(std::span<const unsigned> ms, unsigned n, const BigRational& x) {
    BigRational total;
    for (const auto& t : reduce_multi(ms).terms) total.add_product(t.coeff, pochhammer_zeta_at_nonpositive(t.a, t.J, n, x));
    return total;
}

}  // namespace mzeta
