#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mzeta {

/// Arbitrary-precision signed integer. Zero is canonical (GMP has no negative zero).
class BigInt {
public:
    BigInt() = default;
    BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    BigInt(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    BigInt(unsigned long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    BigInt(unsigned v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal string. Throws Error(InvalidArgument) on junk.
    static BigInt from_string(std::string_view text);

    std::string to_string() const { return v_.get_str(10); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    const mpz_class& raw() const { return v_; }

    BigInt operator-() const { return BigInt(mpz_class(-v_)); }
    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
    /// Truncating division (C semantics).
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

private:
    mpz_class v_;
};

BigInt abs(const BigInt& v);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt factorial(unsigned n);
BigInt pow(const BigInt& base, unsigned exponent);

/// Exact rational num/den with gcd(|num|, den) = 1 and den >= 1, normalized on construction.
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    BigRational(unsigned long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(unsigned v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "p", "p/q" and plain decimals such as "-0.75" or "1.25e-3"; decimals are read exactly.
    static BigRational from_string(std::string_view text);

    /// Exact value of a finite long double (every such value is dyadic).
    static BigRational from_long_double(long double v);

    /// "num/den", with "/den" omitted when den = 1.
    std::string to_string() const;

    BigInt num() const { return BigInt(mpz_class(v_.get_num())); }
    BigInt den() const { return BigInt(mpz_class(v_.get_den())); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    const mpq_class& raw() const { return v_; }

    /// Nearest long double (rounding error of a couple of ulps).
    long double to_long_double() const;

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    /// Throws Error(Domain) on division by zero.
    BigRational& operator/=(const BigRational& o);
    /// *this += a * b
    void add_product(const BigRational& a, const BigRational& b) { v_ += a.v_ * b.v_; }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.to_string(); }

private:
    mpq_class v_;
};

BigRational pow(const BigRational& base, int exponent);

/// (-1)^k as a small integer.
constexpr long sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace mzeta
