#pragma once

#include <vector>

#include "mzeta/bigrational.hpp"
#include "mzeta/types.hpp"

namespace mzeta {

/// Knobs for the Euler-Maclaurin evaluator.
///
/// N = 0 picks the smallest shift with x + N >= max(10, 2|s|); J is the number of
/// Bernoulli correction terms. The remainder bound shrinks monotonically in N at fixed J.
struct EvalParams {
    unsigned N = 0;
    unsigned J = 15;
    long double tol = 1e-15L;  // relative
};

/// A numeric value with the error estimate that came with it.
struct Evaluation {
    Complex value;
    long double error_bound = 0.0L;  // absolute
    unsigned N = 0;
    unsigned J = 0;
};

/// zeta(s,x) for x > 0, s != 1. When params.N is 0, N is doubled until the remainder
/// bound meets tol (relative) or a hard cap is hit.
Evaluation hurwitz_zeta_eval(Complex s, long double x, const EvalParams& params = {});
inline Complex hurwitz_zeta(Complex s, long double x, const EvalParams& params = {}) {
    return hurwitz_zeta_eval(s, x, params).value;
}

/// zeta(-m, x) = -B_{m+1}(x)/(m+1), any rational x.
BigRational hurwitz_zeta_neg(unsigned m, const BigRational& x);

/// zeta_n(s,x) = sum_k C(k+n-1, n-1) (x+k)^{-s}, summed directly for k < K and with
/// Euler-Maclaurin applied to the weighted summand beyond. Needs Re(s) > n + 1.
/// error_bound is the absolute tail remainder bound; K doubles until it is <= tol.
Evaluation multi_hurwitz_series_eval(unsigned n, Complex s, long double x, long double tol = 1e-16L);
inline Complex multi_hurwitz_series(unsigned n, Complex s, long double x, long double tol = 1e-16L) {
    return multi_hurwitz_series_eval(n, s, x, tol).value;
}

/// sum_{k>=K} sum_r p[r] (x+k)^{r-s} by Euler-Maclaurin with `terms` Bernoulli corrections.
/// error_bound covers the truncation only. Needs Re(s) > p.size().
Evaluation power_sum_tail(const std::vector<Complex>& p, Complex s, long double x, unsigned K, unsigned terms = 15);

/// zeta_n(s,x) through single Hurwitz values weighted by Noerlund polynomials:
///   sign/(n-1)! sum_{k<n} (-1)^k C(n-1,k) B^{(n)}_{n-k-1}(x) zeta(s-k,x),
/// sign = (-1)^{n-1} (corrected) or (-1)^n (as printed).
Complex corollary1_first_form(unsigned n, Complex s, long double x, const EvalParams& params, Variant v);

/// Same function with unsigned Stirling coefficients c(n, m+k+1) x^m.
Complex corollary1_second_form(unsigned n, Complex s, long double x, const EvalParams& params, Variant v);

/// zeta_n(s,x) by the corrected first form. Poles at s in {1..n} are reported.
/// The error bound sums |coefficient| * bound of each Hurwitz value.
Evaluation multi_hurwitz_eval(unsigned n, Complex s, long double x, const EvalParams& params = {});
inline Complex multi_hurwitz(unsigned n, Complex s, long double x, const EvalParams& params = {}) {
    return multi_hurwitz_eval(n, s, x, params).value;
}
inline Complex second_corollary1_form(unsigned n, Complex s, long double x, const EvalParams& params = {}) {
    return corollary1_second_form(n, s, x, params, Variant::Corrected);
}

/// zeta_n(-m, x) = (-1)^n m!/(m+n)! B^{(n)}_{m+n}(x).
BigRational multi_hurwitz_neg(unsigned n, unsigned m, const BigRational& x);

/// First form evaluated exactly at s = -m, with zeta(-m-k, x) from hurwitz_zeta_neg.
BigRational corollary1_at_nonpositive(unsigned n, unsigned m, const BigRational& x, Variant v);

/// Throws Error(Pole) when s is one of 1..n.
void check_multi_poles(unsigned n, Complex s);

}  // namespace mzeta
