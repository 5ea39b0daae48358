#include "mzeta/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "mzeta/bernoulli.hpp"
#include "mzeta/combinatorics.hpp"
#include "mzeta/error.hpp"

namespace mzeta {

namespace {

constexpr unsigned kMaxJ = 64;
constexpr unsigned kMaxShift = 1U << 22;
constexpr long double kEps = std::numeric_limits<long double>::epsilon();

// B_{2j}/(2j)! for j = 0..kMaxJ+1, computed once from the exact numbers.
const std::array<long double, kMaxJ + 2>& bernoulli_ratio_table() {
    static const std::array<long double, kMaxJ + 2> table = [] {
        std::array<long double, kMaxJ + 2> t{};
        const std::vector<BigRational> B = bernoulli_numbers(2 * (kMaxJ + 1));
        for (unsigned j = 0; j <= kMaxJ + 1; ++j)
            t[j] = (B[2 * j] / BigRational(factorial(2 * j))).to_long_double();
        return t;
    }();
    return table;
}

void check_point(Complex s, long double x) {
    if (!std::isfinite(x) || x <= 0.0L) raise(ErrorKind::Domain, "x must be a positive real");
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) raise(ErrorKind::Domain, "s must be finite");
}

// u^{-s} for real u > 0.
Complex upow(long double u, Complex s) { return std::exp(-s * std::log(u)); }

struct EmResult {
    Complex value;
    long double bound;
};

EmResult euler_maclaurin(Complex s, long double x, unsigned N, unsigned J) {
    const auto& ratio = bernoulli_ratio_table();
    Complex head = 0;
    long double scale = 0;
    for (unsigned n = 0; n < N; ++n) {
        const Complex term = upow(x + n, s);
        head += term;
        scale = std::max(scale, std::abs(term));
    }
    const long double u = x + N;
    const Complex us = upow(u, s);
    Complex tail = us * u / (s - 1.0L) + 0.5L * us;
    // term_j = B_{2j}/(2j)! (s)_{2j-1} u^{-s-2j+1}
    Complex poch = s;
    Complex power = us / u;
    const long double inv_u2 = 1.0L / (u * u);
    for (unsigned j = 1; j <= J; ++j) {
        tail += ratio[j] * poch * power;
        poch *= (s + static_cast<long double>(2 * j - 1)) * (s + static_cast<long double>(2 * j));
        power *= inv_u2;
    }
    // Remainder: first omitted term times |s+2J+1| / (Re s + 2J + 1).
    const long double sigma = s.real() + 2 * J + 1;
    long double factor = std::abs(s + static_cast<long double>(2 * J + 1));
    factor = sigma > 0 ? factor / sigma : std::numeric_limits<long double>::infinity();
    const long double bound = std::abs(ratio[J + 1] * poch * power) * factor;
    const Complex value = head + tail;
    // Rounding grows with the number of terms and with the largest summand.
    scale = std::max({scale, std::abs(tail), std::abs(value)});
    const long double rounding = 4 * kEps * (N + J + 2) * scale;
    return {value, bound + rounding};
}

unsigned default_shift(Complex s, long double x) {
    const long double target = std::max(10.0L, 2.0L * std::abs(s));
    return x >= target ? 0U : static_cast<unsigned>(std::ceil(target - x));
}

bool is_integer_in(Complex s, long lo, long hi) {
    if (s.imag() != 0.0L) return false;
    const long double r = s.real();
    return r == std::floor(r) && r >= lo && r <= hi;
}

long double to_ld(const BigRational& q) { return q.to_long_double(); }

}  // namespace

Evaluation hurwitz_zeta_eval(Complex s, long double x, const EvalParams& params) {
    check_point(s, x);
    if (s == Complex(1.0L, 0.0L)) raise(ErrorKind::Pole, "zeta(s,x) has a pole at s = 1");
    if (params.J == 0 || params.J > kMaxJ) raise(ErrorKind::InvalidArgument, "J must be in 1..64");
    unsigned J = params.J;
    if (params.N != 0) {
        const EmResult r = euler_maclaurin(s, x, params.N, J);
        return {r.value, r.bound, params.N, J};
    }
    // The remainder bound needs Re(s) + 2J + 1 > 0.
    while (s.real() + 2 * J + 1 <= 1.0L && J < kMaxJ) ++J;
    unsigned N = default_shift(s, x);
    EmResult r = euler_maclaurin(s, x, N, J);
    while (r.bound > params.tol * std::abs(r.value) && N < kMaxShift) {
        const unsigned next_N = std::max(2 * N, 16U);
        const EmResult next = euler_maclaurin(s, x, next_N, J);
        if (next.bound >= r.bound) break;  // rounding floor reached
        r = next;
        N = next_N;
    }
    return {r.value, r.bound, N, J};
}

BigRational hurwitz_zeta_neg(unsigned m, const BigRational& x) {
    return -bernoulli_poly(m + 1)(x) / BigRational(m + 1);
}

Evaluation multi_hurwitz_series_eval(unsigned n, Complex s, long double x, long double tol) {
    check_point(s, x);
    if (n == 0) raise(ErrorKind::InvalidArgument, "order n must be positive");
    if (!(s.real() > n + 1.0L))
        raise(ErrorKind::DivergentRegion, "direct multiple series needs Re(s) > n + 1");

    // Weight C(k+n-1, n-1) = P(x+k) with P(u) = prod_{i=1}^{n-1} (u - x + i) / (n-1)!.
    std::vector<long double> p{1.0L};
    for (unsigned i = 1; i < n; ++i) {
        std::vector<long double> q(p.size() + 1, 0.0L);
        const long double c = static_cast<long double>(i) - x;
        for (std::size_t r = 0; r < p.size(); ++r) {
            q[r + 1] += p[r];
            q[r] += c * p[r];
        }
        p = std::move(q);
    }
    long double fact = 1.0L;
    for (unsigned i = 2; i < n; ++i) fact *= i;
    for (auto& c : p) c /= fact;

    const std::vector<Complex> pc(p.begin(), p.end());
    unsigned K = std::max({32U, 8 * n, static_cast<unsigned>(std::ceil(2 * std::abs(s)))});
    Complex head = 0;
    long double weight = 1.0L;  // C(k+n-1, n-1) at k = done
    unsigned done = 0;
    while (true) {
        for (; done < K; ++done) {
            head += weight * upow(x + done, s);
            weight = weight * (done + n) / (done + 1);
        }
        const Evaluation tail = power_sum_tail(pc, s, x, K);
        if (tail.error_bound <= tol || K >= kMaxShift) return {head + tail.value, tail.error_bound, K, tail.J};
        K *= 2;
    }
}

Evaluation power_sum_tail(const std::vector<Complex>& p, Complex s, long double x, unsigned K, unsigned terms) {
    if (terms == 0 || terms > kMaxJ) raise(ErrorKind::InvalidArgument, "tail terms out of range");
    const auto& ratio = bernoulli_ratio_table();
    const long double u = x + K;
    Complex integral = 0, half = 0, corr = 0, next = 0;
    long double factor = 0;
    for (std::size_t r = 0; r < p.size(); ++r) {
        if (p[r] == Complex(0)) continue;
        // g_r(t) = (x+t)^{a}, a = r - s
        const Complex a = static_cast<long double>(r) - s;
        const Complex ua = upow(u, -a);
        integral += p[r] * ua * u / (s - static_cast<long double>(r) - 1.0L);
        half += 0.5L * p[r] * ua;
        // q-th derivative: a(a-1)...(a-q+1) u^{a-q}
        Complex ff = a;
        Complex pw = ua / u;
        for (unsigned j = 1; j <= terms + 1; ++j) {
            const Complex d = ff * pw;  // derivative of order 2j-1
            if (j <= terms)
                corr -= ratio[j] * p[r] * d;
            else
                next += ratio[j] * p[r] * d;
            ff *= (a - static_cast<long double>(2 * j - 1)) * (a - static_cast<long double>(2 * j));
            pw /= u * u;
        }
        const long double sig = s.real() - r + 2 * terms + 1;
        factor = std::max(factor, std::abs(s - static_cast<long double>(r) + static_cast<long double>(2 * terms + 1)) / sig);
    }
    return {integral + half + corr, std::abs(next) * factor, K, terms};
}

void check_multi_poles(unsigned n, Complex s) {
    if (is_integer_in(s, 1, n)) raise(ErrorKind::Pole, "zeta_n(s,x) has a pole at s = " + std::to_string(static_cast<long>(s.real())));
}

namespace {

// Coefficients of zeta(s-k,x), k = 0..n-1, as exact rationals at the point x.
std::vector<BigRational> first_form_coeffs(unsigned n, const BigRational& x, Variant v) {
    std::vector<BigRational> c(n);
    const BigRational scale = BigRational(v == Variant::Corrected ? sign_pow(n - 1) : sign_pow(n)) / BigRational(factorial(n - 1));
    for (unsigned k = 0; k < n; ++k)
        c[k] = scale * BigRational(sign_pow(k)) * BigRational(binomial(n - 1, k)) * norlund_poly(n - k - 1, n)(x);
    return c;
}

std::vector<BigRational> second_form_coeffs(unsigned n, const BigRational& x, Variant v) {
    std::vector<BigRational> c(n);
    const BigRational inv = BigRational(1) / BigRational(factorial(n - 1));
    for (unsigned k = 0; k < n; ++k) {
        BigRational sum;
        BigRational xm(1);
        for (unsigned m = 0; m + k + 1 <= n; ++m) {
            BigRational term = BigRational(binomial(m + k, m)) * BigRational(stirling1_unsigned(n, m + k + 1)) * xm;
            if (v == Variant::Corrected && m % 2 == 1) term = -term;
            sum += term;
            xm *= x;
        }
        if (v == Variant::AsPrinted) sum *= BigRational(sign_pow(n) * sign_pow(k));
        c[k] = inv * sum;
    }
    return c;
}

Evaluation combine(const std::vector<BigRational>& c, Complex s, long double x, const EvalParams& params) {
    Evaluation total{0, 0, 0, params.J};
    for (unsigned k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        const long double ck = to_ld(c[k]);
        const Evaluation z = hurwitz_zeta_eval(s - static_cast<long double>(k), x, params);
        total.value += ck * z.value;
        total.error_bound += std::fabs(ck) * z.error_bound;
        total.N = std::max(total.N, z.N);
    }
    return total;
}

}  // namespace

Evaluation multi_hurwitz_eval(unsigned n, Complex s, long double x, const EvalParams& params) {
    if (n == 0) raise(ErrorKind::InvalidArgument, "order n must be positive");
    check_point(s, x);
    check_multi_poles(n, s);
    return combine(first_form_coeffs(n, BigRational::from_long_double(x), Variant::Corrected), s, x, params);
}

Complex corollary1_first_form(unsigned n, Complex s, long double x, const EvalParams& params, Variant v) {
    if (n == 0) raise(ErrorKind::InvalidArgument, "order n must be positive");
    check_point(s, x);
    check_multi_poles(n, s);
    return combine(first_form_coeffs(n, BigRational::from_long_double(x), v), s, x, params).value;
}

Complex corollary1_second_form(unsigned n, Complex s, long double x, const EvalParams& params, Variant v) {
    if (n == 0) raise(ErrorKind::InvalidArgument, "order n must be positive");
    check_point(s, x);
    check_multi_poles(n, s);
    return combine(second_form_coeffs(n, BigRational::from_long_double(x), v), s, x, params).value;
}

BigRational multi_hurwitz_neg(unsigned n, unsigned m, const BigRational& x) {
    if (n == 0) raise(ErrorKind::InvalidArgument, "order n must be positive");
    return BigRational(sign_pow(n)) * BigRational(factorial(m)) / BigRational(factorial(m + n)) * norlund_poly(m + n, n)(x);
}

BigRational corollary1_at_nonpositive(unsigned n, unsigned m, const BigRational& x, Variant v) {
    if (n == 0) raise(ErrorKind::InvalidArgument, "order n must be positive");
    const std::vector<BigRational> c = first_form_coeffs(n, x, v);
    BigRational total;
    for (unsigned k = 0; k < n; ++k) total.add_product(c[k], hurwitz_zeta_neg(m + k, x));
    return total;
}

}  // namespace mzeta
