#include "mzeta/parse.hpp"

#include <cmath>
#include <cstdio>

#include "mzeta/error.hpp"

namespace mzeta {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

long double parse_part(std::string_view s, std::string_view whole) {
    try {
        return BigRational::from_string(s).to_long_double();
    } catch (const Error&) {
        raise(ErrorKind::InvalidArgument, "not a number: '" + std::string(whole) + "'");
    }
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) raise(ErrorKind::InvalidArgument, "empty complex number");
    if (s.back() != 'i') return {parse_part(s, text), 0.0L};

    const std::string_view body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not leading and not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
    long double im = 0.0L;
    if (im_part.empty() || im_part == "+")
        im = 1.0L;
    else if (im_part == "-")
        im = -1.0L;
    else
        im = parse_part(im_part.front() == '+' ? im_part.substr(1) : im_part, text);
    const long double re = re_part.empty() ? 0.0L : parse_part(re_part, text);
    return {re, im};
}

long double parse_real(std::string_view text) { return parse_part(trim(text), text); }

std::vector<unsigned> parse_index_list(std::string_view text) {
    std::vector<unsigned> out;
    std::string_view s = trim(text);
    if (s.empty()) raise(ErrorKind::InvalidArgument, "empty index list");
    while (true) {
        const auto comma = s.find(',');
        const std::string_view item = trim(s.substr(0, comma));
        const BigInt v = BigInt::from_string(item);
        if (v.sign() < 0 || v > BigInt(100000)) raise(ErrorKind::InvalidArgument, "bad index '" + std::string(item) + "'");
        out.push_back(static_cast<unsigned>(v.raw().get_ui()));
        if (comma == std::string_view::npos) break;
        s = s.substr(comma + 1);
    }
    return out;
}

std::string format_real(long double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, v);
    return buf;
}

std::string format_complex(const Complex& z, int digits) {
    std::string s = format_real(z.real(), digits);
    const long double im = z.imag();
    if (std::signbit(im))
        s += "-" + format_real(-im, digits);
    else
        s += "+" + format_real(im, digits);
    return s + "i";
}

}  // namespace mzeta
