// Registry of the checked identities: default grids and the two sides of each.
#include "identities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mzeta/bernoulli.hpp"
#include "mzeta/combinatorics.hpp"
#include "mzeta/error.hpp"
#include "mzeta/hurwitz.hpp"
#include "mzeta/laurent_series.hpp"
#include "mzeta/parse.hpp"
#include "mzeta/rational_poly.hpp"
#include "mzeta/zeta_ops.hpp"

namespace mzeta::detail {

// ---- parameter access -------------------------------------------------------

const std::string& Params::raw(const std::string& name) const {
    for (const auto& [k, v] : p_)
        if (k == name) return v;
    raise(ErrorKind::InvalidArgument, "missing parameter '" + name + "'");
}

unsigned Params::uint(const std::string& name) const {
    const BigInt v = BigInt::from_string(raw(name));
    if (v.sign() < 0 || v > BigInt(10000)) raise(ErrorKind::InvalidArgument, "parameter '" + name + "' out of range");
    return static_cast<unsigned>(v.raw().get_ui());
}

Complex Params::complex(const std::string& name) const { return parse_complex(raw(name)); }
long double Params::real(const std::string& name) const { return parse_real(raw(name)); }
BigRational Params::rational(const std::string& name) const { return BigRational::from_string(raw(name)); }
std::vector<unsigned> Params::indices(const std::string& name) const { return parse_index_list(raw(name)); }

namespace {

using Poly = RationalPoly;

// ---- formatting -------------------------------------------------------------

std::string fmt_s(Complex s) { return s.imag() == 0 ? format_real(s.real()) : format_complex(s); }

std::string fmt_idx(const std::vector<unsigned>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string str(unsigned v) { return std::to_string(v); }

Outcome exact_outcome(const BigRational& l, const BigRational& r) {
    return {true, l.to_string(), r.to_string(), l == r, 0, 0};
}

Outcome poly_outcome(const Poly& l, const Poly& r) { return {true, l.to_json(), r.to_json(), l == r, 0, 0}; }

Outcome series_outcome(const LaurentSeries& l, const LaurentSeries& r, int order) {
    const bool eq = agrees_through(l, r, order);
    return {true, l.truncated(order).to_string(), r.truncated(order).to_string(), eq, 0, 0};
}

Outcome numeric_outcome(Complex l, Complex r) {
    return {false, format_complex(l), format_complex(r), false, l, r};
}

// ---- grid helpers -----------------------------------------------------------

std::vector<unsigned> span_of(const GridSpec& g, const std::string& name, unsigned lo, unsigned hi) {
    if (auto it = g.ranges.find(name); it != g.ranges.end()) std::tie(lo, hi) = it->second;
    std::vector<unsigned> v;
    for (unsigned i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

std::vector<std::string> x_grid(const GridSpec& g, std::vector<std::string> defaults) {
    return g.x_points ? *g.x_points : defaults;
}

// True when s keeps distance >= 0.5 from every integer in [lo, hi].
bool clear_of_poles(Complex s, long lo, long hi) {
    for (long p = lo; p <= hi; ++p)
        if (std::abs(s - Complex(static_cast<long double>(p), 0)) < 0.5L) return false;
    return true;
}

// Default s points (or the override), filtered against the pole range [lo, hi].
std::vector<Complex> s_grid(const GridSpec& g, const std::vector<Complex>& defaults, long lo, long hi) {
    std::vector<Complex> out;
    for (Complex s : g.s_points ? *g.s_points : defaults)
        if (clear_of_poles(s, lo, hi)) out.push_back(s);
    return out;
}

std::vector<Complex> rect(const std::vector<long double>& re, const std::vector<long double>& im) {
    std::vector<Complex> out;
    for (long double r : re)
        for (long double i : im) out.emplace_back(r, i);
    return out;
}

// Index vectors of length d in lo..hi with entry sum <= max_sum, by d, sum, lex.
std::vector<std::vector<unsigned>> index_vectors(const std::vector<unsigned>& ds, unsigned max_sum) {
    std::vector<std::vector<unsigned>> out;
    for (unsigned d : ds) {
        if (d == 0) continue;
        for (unsigned total = 0; total <= max_sum; ++total)
            for_each_composition(total, d, [&](std::span<const unsigned> ks) { out.emplace_back(ks.begin(), ks.end()); });
    }
    return out;
}

BigRational Q(const BigInt& v) { return BigRational(v); }
BigRational fact(unsigned n) { return BigRational(factorial(n)); }
long double ld(const BigRational& q) { return q.to_long_double(); }

// x^k as a polynomial.
Poly xpow(unsigned k) { return Poly::monomial(BigRational(1), k); }

// ---- series identities ------------------------------------------------------

Outcome eval_L11(const Params& p, Variant) {
    const unsigned n = p.uint("n");
    const int K = static_cast<int>(p.uint("order"));
    const LaurentSeries f = series_of_f(K + static_cast<int>(n) + 2);
    LaurentSeries rhs = LaurentSeries::zero();
    for (unsigned k = 1; k <= n + 1; ++k) rhs += pow(f, static_cast<int>(k)) * (fact(k - 1) * Q(stirling2(n + 1, k)));
    rhs *= BigRational(sign_pow(n));
    return series_outcome(derivative(f, n), rhs, K);
}

Outcome eval_L12(const Params& p, Variant) {
    const unsigned n = p.uint("n");
    if (n == 0) raise(ErrorKind::InvalidArgument, "n must be positive");
    const int K = static_cast<int>(p.uint("order"));
    const LaurentSeries f = series_of_f(K + static_cast<int>(n) + 2);
    LaurentSeries rhs = LaurentSeries::zero();
    for (unsigned k = 0; k < n; ++k) rhs += derivative(f, k) * Q(stirling1_unsigned(n, k + 1));
    rhs *= BigRational(sign_pow(n - 1)) / fact(n - 1);
    return series_outcome(pow(f, static_cast<int>(n)), rhs, K);
}

Outcome eval_ORTH(const Params& p, Variant) {
    const unsigned n = p.uint("n"), m = p.uint("m");
    return exact_outcome(BigRational(kronecker_orthogonality(n, m)), BigRational(n == m ? sign_pow(n) : 0));
}

Outcome eval_P16(const Params& p, Variant) {
    const unsigned n = p.uint("n");
    const int K = static_cast<int>(p.uint("order"));
    const std::string& form = p.raw("form");
    if (form != "b-power" && form != "f-power") raise(ErrorKind::InvalidArgument, "form must be b-power or f-power");
    const int pad = static_cast<int>(n) + 4;
    const LaurentSeries b = series_of_b(K + pad);
    const LaurentSeries f = series_of_f(K + pad);
    LaurentSeries rhs = LaurentSeries::zero();
    for (unsigned k = 1; k <= n + 1; ++k) {
        // (S(n+1,k) t - n S(n,k))
        const LaurentSeries lin = LaurentSeries::monomial(Q(stirling2(n + 1, k)), 1) -
                                  LaurentSeries::constant(BigRational(n) * Q(stirling2(n, k)));
        const LaurentSeries kernel =
            form == "b-power" ? shift(pow(b, static_cast<int>(k)), -static_cast<int>(k)) : pow(f, static_cast<int>(k));
        rhs += lin * kernel * fact(k - 1);
    }
    rhs *= BigRational(sign_pow(n));
    return series_outcome(derivative(b, n), rhs, K);
}

// ---- single and multiple Hurwitz -------------------------------------------

Outcome eval_T1(const Params& p, Variant v) {
    const unsigned m = p.uint("m");
    const Complex s = p.complex("s");
    const long double x = p.real("x");
    Complex lhs = 0;
    for (unsigned k = 1; k <= m + 1; ++k) {
        const long double c = ld(fact(k - 1) * Q(stirling2(m + 1, k)));
        const long double sign = v == Variant::Corrected ? sign_pow(k - 1) : sign_pow(m);
        lhs += sign * c * multi_zeta(k, s, x, ZetaRoute::Auto);
    }
    return numeric_outcome(lhs, Z_single_hurwitz(m, s, x));
}

Outcome eval_C1(const Params& p, Variant v) {
    const unsigned n = p.uint("n");
    const Complex s = p.complex("s");
    const long double x = p.real("x");
    return numeric_outcome(corollary1_first_form(n, s, x, {}, v), multi_zeta(n, s, x, ZetaRoute::Auto));
}

Outcome eval_C1b(const Params& p, Variant v) {
    const unsigned n = p.uint("n");
    const Complex s = p.complex("s");
    const long double x = p.real("x");
    return numeric_outcome(corollary1_second_form(n, s, x, {}, v), multi_zeta(n, s, x, ZetaRoute::Auto));
}

Outcome eval_C1neg(const Params& p, Variant v) {
    const unsigned n = p.uint("n"), m = p.uint("m");
    const BigRational x = p.rational("x");
    return exact_outcome(corollary1_at_nonpositive(n, m, x, v), multi_hurwitz_neg(n, m, x));
}

Outcome eval_E24(const Params& p, Variant v) {
    const unsigned m = p.uint("m"), n = p.uint("n");
    if (m == 0 || n == 0) raise(ErrorKind::InvalidArgument, "m and n must be positive");
    Poly sum;
    for (unsigned k = 0; k < n; ++k) {
        const BigInt c = v == Variant::Corrected ? binomial(n - 1, k) : binomial(m - 1, k);
        if (c.is_zero()) continue;
        sum += norlund_poly(n - k - 1, n) * bernoulli_poly(m + k + 1) *
               (BigRational(sign_pow(k)) * Q(c) / BigRational(m + k + 1));
    }
    sum *= BigRational(m + n) * Q(binomial(m + n - 1, n - 1));
    return poly_outcome(norlund_poly(m + n, n), sum);
}

Outcome eval_T2(const Params& p, Variant v) {
    const auto [l, r] = Zhat_sides(p.uint("m"), p.complex("s"), p.real("x"), v, ZetaRoute::Auto);
    return numeric_outcome(l, r);
}

// sum_k C(m,k) (-1)^k x^{m-k} B_{n+k}(x)
Poly c2_hurwitz_side(unsigned m, unsigned n) {
    Poly sum;
    for (unsigned k = 0; k <= m; ++k)
        sum += xpow(m - k) * bernoulli_poly(n + k) * (BigRational(sign_pow(k)) * Q(binomial(m, k)));
    return sum;
}

// sum_k sign_k (k-1)! n!/(n+k)! ( (n+k) S(m+1,k) B^{(k)}_{n+k-1}(x) +- m S(m,k) B^{(k)}_{n+k}(x) )
Poly c2_stirling_side(unsigned m, unsigned n, Variant v) {
    Poly sum;
    for (unsigned k = 1; k <= m + 1; ++k) {
        const BigRational w = fact(k - 1) * fact(n) / fact(n + k);
        Poly a = norlund_poly(n + k - 1, k) * (BigRational(n + k) * Q(stirling2(m + 1, k)));
        const Poly b = norlund_poly(n + k, k) * (BigRational(m) * Q(stirling2(m, k)));
        if (v == Variant::Corrected) {
            a -= b;
        } else {
            a += b;
            a *= BigRational(sign_pow(k - 1));
        }
        sum += a * w;
    }
    return sum;
}

Outcome eval_C2(const Params& p, Variant v) {
    const unsigned m = p.uint("m"), n = p.uint("n");
    Poly lhs = c2_hurwitz_side(m, n);
    if (v == Variant::AsPrinted && m % 2 == 1) lhs = -lhs;
    return poly_outcome(lhs, c2_stirling_side(m, n, v));
}

Outcome eval_E27(const Params& p, Variant v) {
    const unsigned m = p.uint("m"), n = p.uint("n");
    BigRational lhs = bernoulli_number(n + m);
    if (v == Variant::Corrected && m % 2 == 1) lhs = -lhs;
    return exact_outcome(lhs, c2_stirling_side(m, n, v).coefficient(0));
}

// ---- Z_{m_1..m_d} -----------------------------------------------------------

Outcome eval_T5(const Params& p, Variant v) {
    const std::vector<unsigned> ms = p.indices("ms");
    const unsigned n = p.uint("n");
    const BigRational x = p.rational("x");
    const Poly lhs = v == Variant::Corrected ? Z_multi_neg(ms, n) : umbral_power(ms, n);
    return exact_outcome(lhs(x), Z_multi_neg_series(ms, n, x));
}

std::vector<unsigned> plus(std::span<const unsigned> a, std::span<const unsigned> b) {
    std::vector<unsigned> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

long double powx(long double x, unsigned k) { return std::pow(x, static_cast<long double>(k)); }

Outcome eval_T6(const Params& p, Variant) {
    const std::vector<unsigned> kv = p.indices("k");
    const unsigned m = p.uint("m");
    const Complex s = p.complex("s");
    const long double x = p.real("x");
    Complex lhs = 0;
    for_each_composition(m, kv.size(), [&](std::span<const unsigned> c) {
        lhs += ld(Q(multinomial(m, c))) * Z_multi(plus(c, kv), s, x, ZetaRoute::Auto);
    });
    Complex rhs = 0;
    for (unsigned k = 0; k <= m; ++k)
        rhs += sign_pow(k) * ld(Q(binomial(m, k))) * powx(x, m - k) * Z_multi(kv, s - static_cast<long double>(k), x);
    return numeric_outcome(lhs, rhs);
}

Outcome eval_E70(const Params& p, Variant v) {
    const unsigned d = p.uint("d"), m = p.uint("m");
    if (d == 0) raise(ErrorKind::InvalidArgument, "d must be positive");
    const Complex s = p.complex("s");
    const long double x = p.real("x");
    Complex lhs = 0;
    for_each_composition(m, d, [&](std::span<const unsigned> c) {
        lhs += ld(Q(multinomial(m, c))) * Z_multi(c, s, x, ZetaRoute::Auto);
    });
    Complex rhs = 0;
    for (unsigned k = 0; k <= m; ++k) {
        const Complex sk = s - static_cast<long double>(k);
        const Complex z = v == Variant::Corrected ? pochhammer(sk, d) * multi_hurwitz(d, sk + static_cast<long double>(d), x)
                                                  : multi_hurwitz(d, sk, x);
        rhs += sign_pow(k) * ld(Q(binomial(m, k))) * powx(x, m - k) * z;
    }
    return numeric_outcome(lhs, rhs);
}

// sum over compositions c of m into d parts of C(m; c) * (umbral power of c)^n
Poly c70_lhs(unsigned d, unsigned m, unsigned n, Variant v) {
    Poly sum;
    for_each_composition(m, d, [&](std::span<const unsigned> c) {
        sum += (v == Variant::Corrected ? shifted_umbral_power(c, n) : umbral_power(c, n)) * Q(multinomial(m, c));
    });
    return sum;
}

Outcome eval_C70a(const Params& p, Variant v) {
    const unsigned d = p.uint("d"), m = p.uint("m"), n = p.uint("n");
    if (d == 0) raise(ErrorKind::InvalidArgument, "d must be positive");
    Poly rhs;
    for (unsigned k = 0; k <= m; ++k) {
        const BigRational c = Q(binomial(m, k));
        if (v == Variant::Corrected)
            rhs += xpow(m - k) * norlund_poly(n + k, d) * (BigRational(sign_pow(k)) * c);
        else
            rhs += xpow(m - k) * norlund_poly(n + m + d, d) *
                   (BigRational(sign_pow(k + d)) * c * fact(n + k) / fact(n + k + d));
    }
    return poly_outcome(c70_lhs(d, m, n, v), rhs);
}

Outcome eval_C70b(const Params& p, Variant v) {
    const unsigned d = p.uint("d"), m = p.uint("m"), n = p.uint("n");
    if (d == 0) raise(ErrorKind::InvalidArgument, "d must be positive");
    const BigRational rhs = v == Variant::Corrected
                                ? BigRational(sign_pow(m)) * norlund_number(n + m, d)
                                : BigRational(sign_pow(m + d)) * fact(n + m) * norlund_number(n + m + d, d) / fact(n + m + d);
    return exact_outcome(c70_lhs(d, m, n, v).coefficient(0), rhs);
}

Outcome eval_L502(const Params& p, Variant) {
    const unsigned m1 = p.uint("m1"), m2 = p.uint("m2");
    const Complex s = p.complex("s");
    const long double x = p.real("x");
    const std::vector<unsigned> ms{m1, m2};
    Complex rhs = 0;
    for (unsigned k2 = 0; k2 <= m2; ++k2) {
        const std::vector<unsigned> red{m1 + m2 - k2, 0};
        for (unsigned k = 0; k <= k2; ++k) {
            const std::vector<unsigned> parts{m2 - k2, k, k2 - k};
            const long double c = ld(Q(multinomial(m2, parts))) * powx(-x, k2 - k);
            rhs += c * Z_multi(red, s - static_cast<long double>(k), x, ZetaRoute::Auto);
        }
    }
    rhs *= static_cast<long double>(sign_pow(m2));
    return numeric_outcome(Z_multi(ms, s, x, ZetaRoute::Auto), rhs);
}

Outcome eval_T510(const Params& p, Variant) {
    const unsigned m1 = p.uint("m1"), m2 = p.uint("m2");
    const Complex s = p.complex("s");
    const long double x = p.real("x");
    const std::vector<unsigned> ms{m1, m2};
    Complex rhs = 0;
    for (unsigned k2 = 0; k2 <= m2; ++k2) {
        const unsigned M = m1 + m2 - k2;
        for (unsigned k = 0; k <= k2; ++k) {
            const std::vector<unsigned> parts{m2 - k2, k2 - k, k};
            const long double c = ld(Q(multinomial(m2, parts))) * powx(-x, k2 - k);
            const Complex sk = s - static_cast<long double>(k);
            // Both j-sums share their argument, so each is summed as one series.
            std::vector<std::pair<BigRational, unsigned>> upper, lower;
            for (unsigned j = 1; j <= M + 1; ++j) {
                const BigRational w = BigRational(sign_pow(j + m2 - 1)) * fact(j - 1);
                upper.emplace_back(w * Q(stirling2(M + 1, j)), j + 1);
                if (M != 0) lower.emplace_back(w * BigRational(M) * Q(stirling2(M, j)), j + 1);
            }
            Complex term = sk * (sk + 1.0L) * multi_zeta_combination(upper, sk + 2.0L, x).value;
            if (!lower.empty()) term += sk * multi_zeta_combination(lower, sk + 1.0L, x).value;
            rhs += c * term;
        }
    }
    return numeric_outcome(Z_multi(ms, s, x, ZetaRoute::Auto), rhs);
}

Outcome eval_CB2(const Params& p, Variant v) {
    const unsigned m1 = p.uint("m1"), m2 = p.uint("m2"), n = p.uint("n");
    const std::vector<unsigned> ms{m1, m2};
    BigRational lhs = umbral_power(ms, n).coefficient(0);
    if (v == Variant::Corrected && (m1 + m2) % 2 == 1) lhs = -lhs;
    BigRational rhs;
    for (unsigned k2 = 0; k2 <= m2; ++k2) {
        const unsigned M = m1 + m2 - k2, N = n + k2;
        BigRational inner;
        for (unsigned j = 1; j <= M + 1; ++j) {
            BigRational t = Q(stirling2(M + 1, j)) * fact(N) / fact(N + j - 1) * norlund_number(N + j - 1, j + 1);
            t -= BigRational(M) * Q(stirling2(M, j)) * fact(N) / fact(N + j) * norlund_number(N + j, j + 1);
            inner.add_product(fact(j - 1), t);
        }
        rhs.add_product(BigRational(sign_pow(m2)) * Q(binomial(m2, k2)), inner);
    }
    return exact_outcome(lhs, rhs);
}

// ---- default grids ----------------------------------------------------------

std::vector<ParamList> grid_series(const GridSpec& g, unsigned lo, unsigned hi, unsigned order) {
    std::vector<ParamList> out;
    for (unsigned n : span_of(g, "n", lo, hi)) out.push_back({{"n", str(n)}, {"order", str(order)}});
    return out;
}

std::vector<ParamList> grid_ORTH(const GridSpec& g) {
    std::vector<ParamList> out;
    for (unsigned n : span_of(g, "n", 0, 30))
        for (unsigned m : span_of(g, "m", 0, 30)) out.push_back({{"n", str(n)}, {"m", str(m)}});
    return out;
}

std::vector<ParamList> grid_P16(const GridSpec& g) {
    std::vector<ParamList> out;
    for (const char* form : {"b-power", "f-power"})
        for (unsigned n : span_of(g, "n", 0, 12)) out.push_back({{"form", form}, {"n", str(n)}, {"order", "20"}});
    return out;
}

std::vector<ParamList> grid_T1(const GridSpec& g) {
    std::vector<ParamList> out;
    for (unsigned m : span_of(g, "m", 0, 4))
        for (Complex s : s_grid(g, rect({m + 2.5L, m + 4.0L, m + 6.0L}, {0, 2, -2}), 1, m + 1))
            for (const auto& x : x_grid(g, {"0.5", "1", "2.3"})) out.push_back({{"m", str(m)}, {"s", fmt_s(s)}, {"x", x}});
    return out;
}

std::vector<ParamList> grid_C1(const GridSpec& g) {
    std::vector<ParamList> out;
    for (unsigned n : span_of(g, "n", 1, 5))
        for (Complex s : s_grid(g, rect({n + 1.5L, n + 3.0L, n + 5.5L}, {0, 1.5L}), 1, n))
            for (const auto& x : x_grid(g, {"0.5", "1.25", "2"})) out.push_back({{"n", str(n)}, {"s", fmt_s(s)}, {"x", x}});
    return out;
}

std::vector<ParamList> grid_C1neg(const GridSpec& g) {
    std::vector<ParamList> out;
    for (unsigned n : span_of(g, "n", 1, 4))
        for (unsigned m : span_of(g, "m", 0, 6))
            for (const auto& x : x_grid(g, {"1/4", "1/2", "1", "3/2"}))
                out.push_back({{"n", str(n)}, {"m", str(m)}, {"x", x}});
    return out;
}

std::vector<ParamList> grid_mn(const GridSpec& g, unsigned mlo, unsigned mhi, unsigned nlo, unsigned nhi) {
    std::vector<ParamList> out;
    for (unsigned m : span_of(g, "m", mlo, mhi))
        for (unsigned n : span_of(g, "n", nlo, nhi)) out.push_back({{"m", str(m)}, {"n", str(n)}});
    return out;
}

std::vector<ParamList> grid_T2(const GridSpec& g) {
    std::vector<ParamList> out;
    for (unsigned m : span_of(g, "m", 0, 4))
        for (Complex s : s_grid(g, rect({m + 3.5L, m + 5.0L}, {0, 1}), 0, m + 1))
            for (const auto& x : x_grid(g, {"0.5", "1.3"})) out.push_back({{"m", str(m)}, {"s", fmt_s(s)}, {"x", x}});
    return out;
}

std::vector<ParamList> grid_T5(const GridSpec& g) {
    std::vector<ParamList> out;
    const auto sums = span_of(g, "msum", 0, 6);
    for (const auto& ms : index_vectors(span_of(g, "d", 1, 3), sums.empty() ? 0 : sums.back()))
        for (unsigned n : span_of(g, "n", 0, 4))
            for (const auto& x : x_grid(g, {"0", "1/2", "1"})) out.push_back({{"ms", fmt_idx(ms)}, {"n", str(n)}, {"x", x}});
    return out;
}

unsigned sum_of(const std::vector<unsigned>& v) { return std::accumulate(v.begin(), v.end(), 0U); }

std::vector<ParamList> grid_T6(const GridSpec& g) {
    std::vector<ParamList> out;
    const std::vector<std::vector<unsigned>> ks{{0}, {1}, {0, 0}, {1, 0}};
    for (const auto& kv : ks)
        for (unsigned m : span_of(g, "m", 0, 3)) {
            const long top = static_cast<long>(sum_of(kv) + m + kv.size());
            for (Complex s : s_grid(g, {Complex(9, 0), Complex(10.5L, 1)}, 1 - static_cast<long>(m), top))
                for (const auto& x : x_grid(g, {"0.5", "1.25"}))
                    out.push_back({{"k", fmt_idx(kv)}, {"m", str(m)}, {"s", fmt_s(s)}, {"x", x}});
        }
    return out;
}

std::vector<ParamList> grid_E70(const GridSpec& g) {
    std::vector<ParamList> out;
    for (unsigned d : span_of(g, "d", 1, 3))
        for (unsigned m : span_of(g, "m", 0, 3))
            for (Complex s : s_grid(g, {Complex(9.5L, 0), Complex(11, 2)}, 1 - static_cast<long>(m), m + d))
                for (const auto& x : x_grid(g, {"0.5", "1.25"}))
                    out.push_back({{"d", str(d)}, {"m", str(m)}, {"s", fmt_s(s)}, {"x", x}});
    return out;
}

std::vector<ParamList> grid_C70(const GridSpec& g) {
    std::vector<ParamList> out;
    for (unsigned d : span_of(g, "d", 1, 3))
        for (unsigned m : span_of(g, "m", 0, 3))
            for (unsigned n : span_of(g, "n", 0, 4)) out.push_back({{"d", str(d)}, {"m", str(m)}, {"n", str(n)}});
    return out;
}

std::vector<ParamList> grid_L502(const GridSpec& g) {
    std::vector<ParamList> out;
    for (unsigned m1 : span_of(g, "m1", 0, 3))
        for (unsigned m2 : span_of(g, "m2", 0, 3))
            for (Complex s : s_grid(g, {Complex(10.5L, 0), Complex(12, 1.5L)}, 1 - static_cast<long>(m2), m1 + m2 + 2))
                for (const auto& x : x_grid(g, {"0.5", "1.25"}))
                    out.push_back({{"m1", str(m1)}, {"m2", str(m2)}, {"s", fmt_s(s)}, {"x", x}});
    return out;
}

std::vector<ParamList> grid_T510(const GridSpec& g) {
    std::vector<ParamList> out;
    const auto sums = span_of(g, "msum", 0, 4);
    const unsigned max_sum = sums.empty() ? 0 : sums.back();
    for (unsigned m1 = 0; m1 <= max_sum; ++m1)
        for (unsigned m2 = 0; m1 + m2 <= max_sum; ++m2)
            for (Complex s : s_grid(g, {Complex(10.5L, 0), Complex(12, 1.5L)}, 1 - static_cast<long>(m2), m1 + m2 + 2))
                for (const auto& x : x_grid(g, {"0.5", "1.25"}))
                    out.push_back({{"m1", str(m1)}, {"m2", str(m2)}, {"s", fmt_s(s)}, {"x", x}});
    return out;
}

std::vector<ParamList> grid_CB2(const GridSpec& g) {
    std::vector<ParamList> out;
    const auto sums = span_of(g, "msum", 0, 5);
    const unsigned max_sum = sums.empty() ? 0 : sums.back();
    for (unsigned m1 = 0; m1 <= max_sum; ++m1)
        for (unsigned m2 = 0; m1 + m2 <= max_sum; ++m2)
            for (unsigned n : span_of(g, "n", 0, 4)) out.push_back({{"m1", str(m1)}, {"m2", str(m2)}, {"n", str(n)}});
    return out;
}

constexpr double kSingleTol = 1e-9;
constexpr double kMultiTol = 1e-8;

const std::vector<Variant> kBoth{Variant::AsPrinted, Variant::Corrected};
const std::vector<Variant> kPrinted{Variant::AsPrinted};
const std::vector<Variant> kCorrected{Variant::Corrected};

std::vector<IdentityDef> build() {
    std::vector<IdentityDef> defs;
    const auto add = [&](std::string id, std::string statement, std::vector<Variant> variants, double tol, auto grid, auto eval) {
        defs.push_back({{std::move(id), std::move(statement), std::move(variants), tol == 0, tol}, grid, eval});
    };
    add("I-C1", "zeta_n(s,x) via Noerlund-weighted Hurwitz values equals the direct multiple series", kBoth, kSingleTol,
        grid_C1, eval_C1);
    add("I-C1-neg", "the Noerlund reduction at s = -m equals (-1)^n m!/(m+n)! B^{(n)}_{m+n}(x)", kBoth, 0, grid_C1neg,
        eval_C1neg);
    add("I-C1b", "zeta_n(s,x) via Stirling-first-kind coefficients equals the direct multiple series", kBoth, kSingleTol,
        grid_C1, eval_C1b);
    add("I-C2", "Zhat identity at s = -n as a polynomial identity in x", kBoth, 0,
        [](const GridSpec& g) { return grid_mn(g, 0, 8, 1, 8); }, eval_C2);
    add("I-C70a", "sum_c C(m;c) Z_c(-n,x) as a polynomial in x", kBoth, 0, grid_C70, eval_C70a);
    add("I-C70b", "sum_c C(m;c) Z_c(-n,0) in Noerlund numbers", kBoth, 0, grid_C70, eval_C70b);
    add("I-CB2", "(B_{m1}+B_{m2})^n from the two-index reduction at s = -n", kBoth, 0, grid_CB2, eval_CB2);
    add("I-E24", "B^{(n)}_{m+n}(x) as a convolution of Noerlund and Bernoulli polynomials", kBoth, 0,
        [](const GridSpec& g) { return grid_mn(g, 1, 8, 1, 8); }, eval_E24);
    add("I-E27", "B_{n+m} in Stirling-weighted Noerlund numbers", kBoth, 0,
        [](const GridSpec& g) { return grid_mn(g, 0, 8, 1, 8); }, eval_E27);
    add("I-E70", "sum_c C(m;c) Z_c(s,x) in multiple Hurwitz values", kBoth, kMultiTol, grid_E70, eval_E70);
    add("I-L11", "n-th derivative of f in powers of f (second-kind Stirling)", kPrinted, 0,
        [](const GridSpec& g) { return grid_series(g, 0, 12, 24); }, eval_L11);
    add("I-L12", "powers of f in derivatives of f (first-kind Stirling)", kPrinted, 0,
        [](const GridSpec& g) { return grid_series(g, 1, 12, 24); }, eval_L12);
    add("I-L502", "Z_{m1,m2}(s,x) in shifted Z_{M,0} values", kCorrected, kMultiTol, grid_L502, eval_L502);
    add("I-ORTH", "sum_k (-1)^k c(n,k) S(k,m) = (-1)^n delta_{nm}", kPrinted, 0, grid_ORTH, eval_ORTH);
    add("I-P16", "n-th derivative of b in powers of b (or f)", kPrinted, 0, grid_P16, eval_P16);
    add("I-T1", "Mellin zeta of F^{(m)} via zeta_k equals the Hurwitz binomial sum", kBoth, kSingleTol, grid_T1, eval_T1);
    add("I-T2", "Mellin zeta of G^{(m)} via zeta_k equals the Hurwitz binomial sum", kBoth, kSingleTol, grid_T2, eval_T2);
    add("I-T5", "Z_{ms}(-n,x) by umbral power equals the series coefficient", kBoth, 0, grid_T5, eval_T5);
    add("I-T510", "Z_{m1,m2}(s,x) as a double sum of multiple Hurwitz values", kCorrected, kMultiTol, grid_T510,
        eval_T510);
    add("I-T6", "Leibniz shift identity for Z_{ms}", kPrinted, kMultiTol, grid_T6, eval_T6);
    std::sort(defs.begin(), defs.end(), [](const IdentityDef& a, const IdentityDef& b) { return a.info.id < b.info.id; });
    return defs;
}

}  // namespace

const std::vector<IdentityDef>& identity_defs() {
    static const std::vector<IdentityDef> defs = build();
    return defs;
}

}  // namespace mzeta::detail
