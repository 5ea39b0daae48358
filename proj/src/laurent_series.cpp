#include "mzeta/laurent_series.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "mzeta/combinatorics.hpp"
#include "mzeta/error.hpp"

namespace mzeta {

namespace {

int cap(long v) {
    if (v >= LaurentSeries::kExact) return LaurentSeries::kExact;
    return static_cast<int>(v);
}

}  // namespace

LaurentSeries::LaurentSeries(int lead, std::vector<BigRational> coeffs, int trunc)
    : lead_(lead), coeffs_(std::move(coeffs)), trunc_(std::min(trunc, kExact)) {
    if (trunc_ < lead_ && !coeffs_.empty())
        raise(ErrorKind::InvalidArgument, "Laurent series truncated below its leading order");
    normalize();
}

LaurentSeries LaurentSeries::monomial(const BigRational& c, int power, int trunc) {
    return LaurentSeries(power, {c}, std::max(trunc, power));
}

void LaurentSeries::normalize() {
    // Drop anything past the truncation order.
    const long known = static_cast<long>(trunc_) - lead_ + 1;
    if (known < static_cast<long>(coeffs_.size())) coeffs_.resize(known < 0 ? 0 : static_cast<std::size_t>(known));
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        lead_ = trunc_;
        return;
    }
    if (first > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
        lead_ += static_cast<int>(first);
    }
}

BigRational LaurentSeries::coefficient(int k) const {
    if (k > trunc_)
        raise(ErrorKind::InvalidArgument,
              "coefficient t^" + std::to_string(k) + " beyond truncation order " + std::to_string(trunc_));
    if (k < lead_) return BigRational(0);
    const auto i = static_cast<std::size_t>(k - lead_);
    return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

LaurentSeries LaurentSeries::truncated(int order) const {
    if (order >= trunc_) return *this;
    if (is_zero() || order < lead_) return zero(order);
    return LaurentSeries(lead_, coeffs_, order);
}

std::string LaurentSeries::to_string(std::string_view var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigRational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const int k = lead_ + static_cast<int>(i);
        if (first) {
            os << c.to_string();
            first = false;
        } else if (c.sign() < 0) {
            os << " - " << (-c).to_string();
        } else {
            os << " + " << c.to_string();
        }
        if (k == 1)
            os << '*' << var;
        else if (k != 0)
            os << '*' << var << '^' << k;
    }
    if (first) os << '0';
    if (!is_exact()) os << " + O(" << var << '^' << (trunc_ + 1) << ')';
    return os.str();
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    *this = add(*this, o);
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
    *this = add(*this, -o);
    return *this;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) {
    *this = mul(*this, o);
    return *this;
}

LaurentSeries& LaurentSeries::operator*=(const BigRational& c) {
    for (auto& v : coeffs_) v *= c;
    normalize();
    return *this;
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    const int trunc = std::min(a.trunc_order(), b.trunc_order());
    if (a.is_zero()) return b.truncated(trunc);
    if (b.is_zero()) return a.truncated(trunc);
    const int lead = std::min(a.lead_order(), b.lead_order());
    const int hi = std::min<long>(trunc, std::max(a.lead_order() + static_cast<long>(a.coeffs().size()),
                                                  b.lead_order() + static_cast<long>(b.coeffs().size())) - 1);
    if (hi < lead) return LaurentSeries::zero(trunc);
    std::vector<BigRational> c(static_cast<std::size_t>(hi - lead + 1));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const int k = a.lead_order() + static_cast<int>(i);
        if (k > hi) break;
        c[static_cast<std::size_t>(k - lead)] += a.coeffs()[i];
    }
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
        const int k = b.lead_order() + static_cast<int>(i);
        if (k > hi) break;
        c[static_cast<std::size_t>(k - lead)] += b.coeffs()[i];
    }
    return LaurentSeries(lead, std::move(c), trunc);
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    // a = O(t^la) known through ta, b likewise: the product is known through min(ta + lb, tb + la).
    const int trunc = cap(std::min(static_cast<long>(a.trunc_order()) + b.lead_order(),
                                   static_cast<long>(b.trunc_order()) + a.lead_order()));
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(trunc);
    const int lead = a.lead_order() + b.lead_order();
    const long natural = static_cast<long>(lead) + static_cast<long>(a.coeffs().size() + b.coeffs().size()) - 2;
    const long hi = std::min<long>(trunc, natural);
    if (hi < lead) return LaurentSeries::zero(trunc);
    std::vector<BigRational> c(static_cast<std::size_t>(hi - lead + 1));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (static_cast<long>(i) > hi - lead) break;
        const std::size_t jmax = std::min<std::size_t>(b.coeffs().size(), static_cast<std::size_t>(hi - lead) - i + 1);
        for (std::size_t j = 0; j < jmax; ++j) c[i + j].add_product(a.coeffs()[i], b.coeffs()[j]);
    }
    return LaurentSeries(lead, std::move(c), trunc);
}

LaurentSeries inverse(const LaurentSeries& a, std::optional<int> through) {
    if (a.is_zero()) raise(ErrorKind::Domain, "inverse of a zero series");
    const int la = a.lead_order();
    long trunc = a.is_exact() ? static_cast<long>(LaurentSeries::kExact)
                              : static_cast<long>(a.trunc_order()) - 2L * la;
    if (through) trunc = std::min<long>(trunc, *through);
    if (trunc >= LaurentSeries::kExact / 2)
        raise(ErrorKind::InvalidArgument, "inverse of an exact series needs an explicit truncation order");
    if (trunc < -la) return LaurentSeries::zero(static_cast<int>(trunc));
    // a = t^la u(t), u(0) = a0 != 0; solve u * v = 1 term by term.
    const std::size_t n = static_cast<std::size_t>(trunc + la + 1);
    const BigRational inv0 = BigRational(1) / a.coeffs()[0];
    std::vector<BigRational> v(n);
    v[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        BigRational s(0);
        const std::size_t top = std::min(k, a.coeffs().size() - 1);
        for (std::size_t i = 1; i <= top; ++i) s.add_product(a.coeffs()[i], v[k - i]);
        v[k] = -s * inv0;
    }
    return LaurentSeries(-la, std::move(v), static_cast<int>(trunc));
}

LaurentSeries pow(const LaurentSeries& a, int k) {
    if (k < 0) return pow(inverse(a), -k);
    LaurentSeries result = LaurentSeries::constant(BigRational(1));
    LaurentSeries base = a;
    unsigned e = static_cast<unsigned>(k);
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        e >>= 1U;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

LaurentSeries derivative(const LaurentSeries& a) {
    const int trunc = a.is_exact() ? LaurentSeries::kExact : a.trunc_order() - 1;
    if (a.is_zero()) return LaurentSeries::zero(trunc);
    std::vector<BigRational> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] * BigRational(a.lead_order() + static_cast<int>(i));
    return LaurentSeries(a.lead_order() - 1, std::move(c), trunc);
}

LaurentSeries derivative(const LaurentSeries& a, unsigned times) {
    LaurentSeries r = a;
    for (unsigned i = 0; i < times; ++i) r = derivative(r);
    return r;
}

LaurentSeries negate_variable(const LaurentSeries& a) {
    std::vector<BigRational> c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if ((a.lead_order() + static_cast<int>(i)) % 2 != 0) c[i] = -c[i];
    return LaurentSeries(a.lead_order(), std::move(c), a.trunc_order());
}

LaurentSeries shift(const LaurentSeries& a, int k) {
    const int trunc = a.is_exact() ? LaurentSeries::kExact : a.trunc_order() + k;
    if (a.is_zero()) return LaurentSeries::zero(trunc);
    return LaurentSeries(a.lead_order() + k, a.coeffs(), trunc);
}

LaurentSeries exp_series(const BigRational& c, int K) {
    std::vector<BigRational> v(static_cast<std::size_t>(std::max(K, -1) + 1));
    BigRational term(1);
    for (int n = 0; n <= K; ++n) {
        v[static_cast<std::size_t>(n)] = term;
        term = term * c / BigRational(n + 1);
    }
    return LaurentSeries(0, std::move(v), K);
}

LaurentSeries mul_exp(const LaurentSeries& a, const BigRational& c, int K) { return mul(a, exp_series(c, K)); }

bool agrees_through(const LaurentSeries& a, const LaurentSeries& b, int order) {
    if (a.trunc_order() < order || b.trunc_order() < order)
        raise(ErrorKind::InvalidArgument, "series compared beyond their truncation order " + std::to_string(order));
    const int lo = std::min(a.lead_order(), b.lead_order());
    for (int k = lo; k <= order; ++k)
        if (a.coefficient(k) != b.coefficient(k)) return false;
    return true;
}

namespace {

// b(t) is the inverse of (e^t - 1)/t = sum t^n/(n+1)!. Cached and grown on demand.
std::mutex b_mutex;
LaurentSeries b_cache = LaurentSeries::zero(-1);

}  // namespace

LaurentSeries series_of_b(int K) {
    if (K < 0) return LaurentSeries::zero(K);
    {
        std::lock_guard lock(b_mutex);
        if (b_cache.trunc_order() >= K) return b_cache.truncated(K);
    }
    const int target = std::max(K, 2 * std::max(0, b_cache.trunc_order()));
    std::vector<BigRational> denom(static_cast<std::size_t>(target + 1));
    BigInt fact(1);
    for (int n = 0; n <= target; ++n) {
        fact *= BigInt(n + 1);
        denom[static_cast<std::size_t>(n)] = BigRational(BigInt(1), fact);
    }
    LaurentSeries b = inverse(LaurentSeries(0, std::move(denom), target));
    std::lock_guard lock(b_mutex);
    if (b.trunc_order() > b_cache.trunc_order()) b_cache = b;
    return b_cache.truncated(K);
}

LaurentSeries series_of_f(int K) { return shift(series_of_b(K + 1), -1); }

LaurentSeries series_of_F(int K) { return -negate_variable(series_of_f(K)); }

LaurentSeries series_of_G(int K) { return negate_variable(series_of_b(K)); }

LaurentSeries FTermExpansion::evaluate(int K) const {
    int max_power = 1;
    for (const Term& t : terms) max_power = std::max(max_power, t.f_power);
    // F^j = t^{-j}(...) loses j-1 orders of validity; pad accordingly.
    const LaurentSeries F = series_of_F(K + max_power);
    LaurentSeries sum = LaurentSeries::zero();
    for (const Term& t : terms) sum += shift(pow(F, t.f_power), t.t_power) * t.coeff;
    return sum.truncated(K);
}

FTermExpansion expand_G_derivative(unsigned m) {
    FTermExpansion e;
    for (unsigned j = 1; j <= m + 1; ++j) {
        const BigRational base = BigRational(factorial(j - 1)) * BigRational(sign_pow(j - 1));
        const BigInt s_next = stirling2(m + 1, j);
        if (!s_next.is_zero()) e.terms.push_back({base * BigRational(s_next), 1, static_cast<int>(j)});
        const BigInt s_same = BigInt(m) * stirling2(m, j);
        if (!s_same.is_zero()) e.terms.push_back({base * BigRational(s_same), 0, static_cast<int>(j)});
    }
    return e;
}

}  // namespace mzeta
