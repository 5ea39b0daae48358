#pragma once

#include <string>
#include <vector>

#include "mzeta/bigrational.hpp"

namespace mzeta {

/// Dense polynomial in x over BigRational, ascending degree, no trailing zeros.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<BigRational> coeffs);
    static RationalPoly constant(const BigRational& c) { return RationalPoly({c}); }
    /// c * x^k
    static RationalPoly monomial(const BigRational& c, unsigned k);

    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigRational coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }

    BigRational operator()(const BigRational& x) const;
    long double operator()(long double x) const;

    /// JSON array of "num/den" strings, ascending degree ("[]" for zero).
    std::string to_json() const;
    /// Human-readable form, e.g. "x^2 - x + 1/6".
    std::string to_string() const;

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    RationalPoly& operator*=(const BigRational& c);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const BigRational& c) { return a *= c; }
    friend RationalPoly operator*(const BigRational& c, RationalPoly a) { return a *= c; }

    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

RationalPoly derivative(const RationalPoly& p);

/// Coefficients converted once to long double, for fast numeric evaluation.
class NumericPoly {
public:
    NumericPoly() = default;
    explicit NumericPoly(const RationalPoly& p);
    long double operator()(long double x) const;

private:
    std::vector<long double> coeffs_;
};

}  // namespace mzeta
