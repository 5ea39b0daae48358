#pragma once

#include <span>
#include <vector>

#include "mzeta/bigrational.hpp"
#include "mzeta/rational_poly.hpp"

namespace mzeta {

/// B_n from the generating function t/(e^t - 1); B_1 = -1/2.
BigRational bernoulli_number(unsigned n);

/// B_0 .. B_n.
std::vector<BigRational> bernoulli_numbers(unsigned n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
RationalPoly bernoulli_poly(unsigned n);

/// Noerlund polynomial B_m^{(order)}(x): m! [t^m] (t/(e^t-1))^order e^{xt}. Memoized.
RationalPoly norlund_poly(unsigned m, unsigned order);

/// B_m^{(order)} = B_m^{(order)}(0).
BigRational norlund_number(unsigned m, unsigned order);

/// (B_{m_1}(x) + ... + B_{m_d}(x))^n read umbrally:
///   sum_{k_1+..+k_d=n} C(n; k_1..k_d) B_{m_1+k_1}(x) ... B_{m_d+k_d}(x).
/// `ms` must be nonempty.
RationalPoly umbral_power(std::span<const unsigned> ms, unsigned n);

/// (-1)^{m_1+..+m_d} (B_{m_1} + ... + B_{m_d} + x)^n with Bernoulli *numbers*:
///   sum_{k_1+..+k_d+j=n} C(n; k_1..k_d, j) B_{m_1+k_1} ... B_{m_d+k_d} x^j  (times the sign).
/// This is (-1)^n n! [t^n] G^{(m_1)}(t)...G^{(m_d)}(t) e^{-xt}, the value of the
/// Mellin zeta Z_{m_1..m_d}(-n, x).
RationalPoly shifted_umbral_power(std::span<const unsigned> ms, unsigned n);

}  // namespace mzeta
