#include "mzeta/rational_poly.hpp"

#include <algorithm>
#include <sstream>

namespace mzeta {

RationalPoly::RationalPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::monomial(const BigRational& c, unsigned k) {
    std::vector<BigRational> v(k + 1);
    v[k] = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational RationalPoly::operator()(const BigRational& x) const {
    BigRational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

long double RationalPoly::operator()(long double x) const { return NumericPoly(*this)(x); }

std::string RationalPoly::to_json() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += '"' + coeffs_[i].to_string() + '"';
    }
    return s + "]";
}

std::string RationalPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigRational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const BigRational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == BigRational(1);
        if (i == 0 || !unit) os << mag.to_string();
        if (i > 0) {
            if (!unit) os << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) { return *this += -o; }

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j].add_product(coeffs_[i], o.coeffs_[j]);
    coeffs_ = std::move(r);
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const BigRational& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

RationalPoly derivative(const RationalPoly& p) {
    if (p.degree() < 1) return RationalPoly();
    std::vector<BigRational> d(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * BigRational(static_cast<unsigned long>(i));
    return RationalPoly(std::move(d));
}

NumericPoly::NumericPoly(const RationalPoly& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs_.push_back(c.to_long_double());
}

long double NumericPoly::operator()(long double x) const {
    long double r = 0.0L;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

}  // namespace mzeta
