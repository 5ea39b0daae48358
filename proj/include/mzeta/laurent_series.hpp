#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzeta/bigrational.hpp"

namespace mzeta {

/// Truncated Laurent series  sum_{k >= lead} c_k t^k  known through t^{trunc}.
///
/// coeffs()[i] is the coefficient of t^{lead+i}; coefficients past the stored
/// range (up to trunc) are zero. After every operation leading and trailing zeros
/// are stripped, so the leading stored coefficient is nonzero unless the series is
/// zero (then coeffs() is empty and lead == trunc). A trunc at or above kExact
/// marks an exact (finite) series such as a polynomial.
class LaurentSeries {
public:
    static constexpr int kExact = 1 << 28;

    LaurentSeries() : lead_(kExact), trunc_(kExact) {}
    LaurentSeries(int lead, std::vector<BigRational> coeffs, int trunc);

    static LaurentSeries zero(int trunc = kExact) { return LaurentSeries(trunc, {}, trunc); }
    static LaurentSeries monomial(const BigRational& c, int power, int trunc = kExact);
    static LaurentSeries constant(const BigRational& c) { return monomial(c, 0); }

    int lead_order() const { return lead_; }
    int trunc_order() const { return trunc_; }
    bool is_exact() const { return trunc_ >= kExact / 2; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    /// Coefficient of t^k. Throws Error(InvalidArgument) when k lies beyond the truncation order.
    BigRational coefficient(int k) const;

    /// Same series with validity lowered to `order` (no-op if already lower).
    LaurentSeries truncated(int order) const;

    /// e.g. "1*t^-1 - 1/2 + 1/12*t + O(t^2)".
    std::string to_string(std::string_view var = "t") const;

    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    LaurentSeries& operator*=(const LaurentSeries& o);
    LaurentSeries& operator*=(const BigRational& c);

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(LaurentSeries a, const LaurentSeries& b) { return a *= b; }
    friend LaurentSeries operator*(LaurentSeries a, const BigRational& c) { return a *= c; }
    friend LaurentSeries operator*(const BigRational& c, LaurentSeries a) { return a *= c; }

    /// Structural equality: same window, same coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

private:
    void normalize();

    int lead_;
    std::vector<BigRational> coeffs_;
    int trunc_;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse. Needs a nonzero series; `through` caps the result order
/// and is required when `a` is exact.
LaurentSeries inverse(const LaurentSeries& a, std::optional<int> through = std::nullopt);

/// a^k by repeated squaring; k < 0 goes through inverse(a).
LaurentSeries pow(const LaurentSeries& a, int k);

LaurentSeries derivative(const LaurentSeries& a);
LaurentSeries derivative(const LaurentSeries& a, unsigned times);

/// a(-t).
LaurentSeries negate_variable(const LaurentSeries& a);

/// t^k a(t).
LaurentSeries shift(const LaurentSeries& a, int k);

/// e^{c t} through t^K.
LaurentSeries exp_series(const BigRational& c, int K);

/// a(t) e^{c t}, with the exponential expanded through t^K.
LaurentSeries mul_exp(const LaurentSeries& a, const BigRational& c, int K);

/// True when both series agree coefficientwise for every power <= order.
/// Throws Error(InvalidArgument) if either side is not known through `order`.
bool agrees_through(const LaurentSeries& a, const LaurentSeries& b, int order);

// Kernel expansions, each valid through t^K:
//   b(t) = t/(e^t - 1),  f(t) = 1/(e^t - 1) = b/t,
//   F(t) = 1/(1 - e^{-t}) = -f(-t),  G(t) = t/(1 - e^{-t}) = b(-t) = t F(t).
LaurentSeries series_of_b(int K);
LaurentSeries series_of_f(int K);
LaurentSeries series_of_F(int K);
LaurentSeries series_of_G(int K);

/// G^{(m)}(t) written as  sum coeff * t^{t_power} * F(t)^{f_power}.
struct FTermExpansion {
    struct Term {
        BigRational coeff;
        int t_power = 0;  // 0 or 1
        int f_power = 1;  // >= 1

        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> terms;

    /// Expands every term with Laurent arithmetic and sums, valid through t^K.
    LaurentSeries evaluate(int K) const;
};

/// G^{(m)} = sum_{j=1}^{m+1} (j-1)! (-1)^{j-1} ( S(m+1,j) t + m S(m,j) ) F^j, zero terms dropped.
FTermExpansion expand_G_derivative(unsigned m);

}  // namespace mzeta
