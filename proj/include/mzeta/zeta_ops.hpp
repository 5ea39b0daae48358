#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mzeta/bigrational.hpp"
#include "mzeta/hurwitz.hpp"
#include "mzeta/laurent_series.hpp"
#include "mzeta/rational_poly.hpp"
#include "mzeta/types.hpp"

namespace mzeta {

/// How multiple Hurwitz values zeta_J(s,x) are obtained inside the Z evaluators.
enum class ZetaRoute {
    Reduction,  // Noerlund-weighted single Hurwitz values (valid everywhere off the poles)
    Series,     // direct binomial-weighted series (needs Re(s) > J + 1)
    Auto,       // Series where valid, otherwise Reduction
};

/// zeta_n(s,x) by the requested route, with its error bound.
Evaluation multi_zeta_eval(unsigned n, Complex s, long double x, ZetaRoute route, const EvalParams& params = {});
inline Complex multi_zeta(unsigned n, Complex s, long double x, ZetaRoute route, const EvalParams& params = {}) {
    return multi_zeta_eval(n, s, x, route, params).value;
}

/// sum_i c_i zeta_{J_i}(s,x) as one series whose weights sum_i c_i C(k+J_i-1, J_i-1) are
/// combined exactly, so cancellation between the terms costs no precision.
/// Needs Re(s) > deg + 1 of the combined weight.
Evaluation multi_zeta_combination(const std::vector<std::pair<BigRational, unsigned>>& terms, Complex s, long double x,
                                  const EvalParams& params = {});

/// Rising factorial s(s+1)...(s+k-1).
Complex pochhammer(Complex s, unsigned k);

/// Z_m(s,x) = (1/Gamma(s)) int t^{s-1} F^{(m)}(t) e^{-xt} dt
///          = sum_k C(m,k) (-1)^k x^{m-k} zeta(s-k,x).
Complex Z_single_hurwitz(unsigned m, Complex s, long double x, const EvalParams& params = {});

/// The same function written as sum_{k=1}^{m+1} (-1)^{k-1} (k-1)! S(m+1,k) zeta_k(s,x).
Complex Z_single_multizeta(unsigned m, Complex s, long double x, ZetaRoute route = ZetaRoute::Auto,
                           const EvalParams& params = {});

/// Both sides of the Zhat_m identity. Corrected:
///   lhs = sum_k (-1)^{k-1}(k-1)! ( s S(m+1,k) zeta_k(s+1,x) + m S(m,k) zeta_k(s,x) )
///   rhs = sum_k C(m,k) (-1)^k x^{m-k} (s-k) zeta(s-k+1,x)
/// As printed the lhs carries (-1)^m, no (-1)^{k-1} and a minus before m, and the
/// rhs uses zeta(s-k+1, m) (Domain error for m = 0).
std::pair<Complex, Complex> Zhat_sides(unsigned m, Complex s, long double x, Variant v,
                                       ZetaRoute route = ZetaRoute::Auto, const EvalParams& params = {});

/// prod_i G^{(m_i)}(t) = sum coeff * t^a * F(t)^J.
struct ReducedForm {
    struct Term {
        BigRational coeff;
        unsigned a = 0;
        unsigned J = 1;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> terms;  // sorted by (a, J), no zero coefficients

    /// Evaluates the t-series of the form, valid through t^K.
    LaurentSeries evaluate(int K) const;
};

/// Cached per index vector.
ReducedForm reduce_multi(std::span<const unsigned> ms);

/// Z_{m_1..m_d}(s,x) = sum coeff (s)_a zeta_J(s+a, x).
///
/// Reduction evaluates each zeta_J through single Hurwitz values. Series sums
/// sum_k sum_a (s)_a W_a(k) (x+k)^{-s-a} directly, with exact integer weights
/// W_a(k) = sum_J coeff C(k+J-1, J-1); it needs Re(s) + a > deg W_a + 1 for every a.
/// Auto takes Series where it converges. The reduced form cancels heavily for small x,
/// and the error bound includes a rounding term for that.
Evaluation Z_multi_eval(std::span<const unsigned> ms, Complex s, long double x, ZetaRoute route = ZetaRoute::Reduction,
                        const EvalParams& params = {});
inline Complex Z_multi(std::span<const unsigned> ms, Complex s, long double x, ZetaRoute route = ZetaRoute::Reduction,
                       const EvalParams& params = {}) {
    return Z_multi_eval(ms, s, x, route, params).value;
}

struct QuadratureResult {
    long double value = 0;
    long double error_estimate = 0;  // absolute, quadrature plus tail
};

/// Direct numerical Mellin integral for real s > 0. Throws QuadratureFailure when the
/// estimated relative error exceeds tol.
QuadratureResult Z_multi_quadrature(std::span<const unsigned> ms, long double s, long double x, long double tol = 1e-9L);

/// G^{(m)}(t) for t > 0 in floating point: Taylor series below t = 1/2, F-power form above.
long double G_derivative(unsigned m, long double t);

/// (s)_a zeta_J(s+a, x) at s = -N, exactly:
///   (-1)^{J-a} N!/(N-a+J)! B^{(J)}_{N+J-a}(x), or 0 when N - a + J < 0.
BigRational pochhammer_zeta_at_nonpositive(unsigned a, unsigned J, unsigned N, const BigRational& x);

/// Z_{ms}(-n, x) as an exact polynomial in x (the shifted umbral power).
RationalPoly Z_multi_neg(std::span<const unsigned> ms, unsigned n);

/// Independent route: (-1)^n n! [t^n] prod G^{(m_i)}(t) e^{-xt}, at a rational x.
BigRational Z_multi_neg_series(std::span<const unsigned> ms, unsigned n, const BigRational& x);

/// Third route: the reduced form evaluated with pochhammer_zeta_at_nonpositive.
BigRational Z_multi_neg_reduced(std::span<const unsigned> ms, unsigned n, const BigRational& x);

}  // namespace mzeta
