#include "mzeta/bigrational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "mzeta/error.hpp"

namespace mzeta {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

BigInt BigInt::from_string(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) raise(ErrorKind::InvalidArgument, "not an integer: '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return BigInt(mpz_class(s, 10));
}

BigInt& BigInt::operator/=(const BigInt& o) {
    if (o.is_zero()) raise(ErrorKind::Domain, "integer division by zero");
    mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    if (o.is_zero()) raise(ErrorKind::Domain, "integer division by zero");
    mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

BigInt abs(const BigInt& v) { return BigInt(mpz_class(::abs(v.raw()))); }

BigInt gcd(const BigInt& a, const BigInt& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(r);
}

BigInt factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return BigInt(r);
}

BigInt pow(const BigInt& base, unsigned exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
    return BigInt(r);
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) raise(ErrorKind::Domain, "rational with zero denominator");
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
}

BigRational BigRational::from_string(std::string_view text) {
    const auto bad = [&] { raise(ErrorKind::InvalidArgument, "not a rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt n = BigInt::from_string(text.substr(0, slash));
        const std::string_view d = text.substr(slash + 1);
        if (!all_digits(d)) bad();
        return BigRational(n, BigInt::from_string(d));
    }

    // Decimal: [sign] digits [. digits] [e|E [sign] digits]
    std::string_view s = text;
    bool negative = false;
    if (s.front() == '-' || s.front() == '+') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exp10 = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        std::string_view digits = es;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
        if (!all_digits(digits) || digits.size() > 6) bad();
        exp10 = std::strtol(std::string(es).c_str(), nullptr, 10);
        s = s.substr(0, e);
    }
    std::string mantissa;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view ip = s.substr(0, dot);
        const std::string_view fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) bad();
        mantissa = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) bad();
        mantissa = std::string(s);
    }
    if (mantissa.empty()) bad();
    mpq_class q(mpz_class(mantissa, 10));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 >= 0)
        q *= scale;
    else
        q /= scale;
    if (negative) q = -q;
    return BigRational(q);
}

BigRational BigRational::from_long_double(long double v) {
    if (!std::isfinite(v)) raise(ErrorKind::Domain, "non-finite value has no rational form");
    if (v == 0.0L) return BigRational(0);
    int e = 0;
    const long double frac = std::frexp(v, &e);
    // frac * 2^64 is an integer for the 64-bit x87 significand.
    const long double scaled = std::ldexp(frac, 64);
    const bool negative = scaled < 0;
    const auto mag = static_cast<unsigned long long>(negative ? -scaled : scaled);
    mpz_class m;
    mpz_import(m.get_mpz_t(), 1, 1, sizeof mag, 0, 0, &mag);
    if (negative) m = -m;
    mpq_class q(m);
    const long shift = static_cast<long>(e) - 64;
    if (shift >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(shift));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-shift));
    return BigRational(q);
}

std::string BigRational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str(10);
    return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

long double BigRational::to_long_double() const {
    if (is_zero()) return 0.0L;
    // 128 bits of mantissa comfortably exceeds the 64-bit long double significand.
    mpf_class f(v_, 128);
    mp_exp_t exp10 = 0;
    const std::string digits = f.get_str(exp10, 10, 30);
    std::string text;
    std::string_view d = digits;
    if (!d.empty() && d.front() == '-') {
        text = "-";
        d.remove_prefix(1);
    }
    text += "0.";
    text += d;
    text += "e" + std::to_string(exp10);
    return std::strtold(text.c_str(), nullptr);
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) raise(ErrorKind::Domain, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational pow(const BigRational& base, int exponent) {
    if (exponent < 0) return BigRational(1) / pow(base, -exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(mpq_class(n, d));
}

}  // namespace mzeta
