#include "mzeta/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "mzeta/error.hpp"

namespace mzeta {

BigInt StirlingTable::at(unsigned n, unsigned k) const {
    if (k > n) return BigInt(0);
    ensure(n);
    std::shared_lock lock(mutex_);
    return rows_[n][k];
}

unsigned StirlingTable::max_n() const {
    std::shared_lock lock(mutex_);
    return static_cast<unsigned>(rows_.size() - 1);
}

std::vector<BigInt> StirlingTable::row(unsigned n) const {
    ensure(n);
    std::shared_lock lock(mutex_);
    return rows_[n];
}

void StirlingTable::ensure(unsigned n) const {
    {
        std::shared_lock lock(mutex_);
        if (n < rows_.size()) return;
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
        const std::vector<BigInt>& prev = rows_.back();
        const unsigned r = static_cast<unsigned>(rows_.size());  // row being built
        std::vector<BigInt> next(r + 1, BigInt(0));
        for (unsigned k = 1; k <= r; ++k) {
            const BigInt left = prev[k - 1];
            const BigInt up = k < r ? prev[k] : BigInt(0);
            if (kind_ == StirlingKind::Second)
                next[k] = BigInt(k) * up + left;
            else
                next[k] = left + BigInt(r - 1) * up;
        }
        rows_.push_back(std::move(next));
    }
}

const StirlingTable& stirling_table(StirlingKind kind) {
    static const StirlingTable first(StirlingKind::FirstUnsigned);
    static const StirlingTable second(StirlingKind::Second);
    return kind == StirlingKind::Second ? second : first;
}

BigInt stirling2(unsigned n, unsigned k) { return stirling_table(StirlingKind::Second).at(n, k); }

BigInt stirling1_unsigned(unsigned n, unsigned k) { return stirling_table(StirlingKind::FirstUnsigned).at(n, k); }

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return BigInt(r);
}

BigInt multinomial(unsigned n, std::span<const unsigned> parts) {
    const unsigned long total = std::accumulate(parts.begin(), parts.end(), 0UL);
    if (total != n)
        raise(ErrorKind::InvalidArgument,
              "multinomial parts sum to " + std::to_string(total) + ", expected " + std::to_string(n));
    // Product of binomials C(running, part) keeps intermediates integral.
    BigInt r(1);
    unsigned running = 0;
    for (unsigned p : parts) {
        running += p;
        r *= binomial(running, p);
    }
    return r;
}

BigInt kronecker_orthogonality(unsigned n, unsigned m) {
    BigInt sum(0);
    const unsigned top = std::max(n, m);
    for (unsigned k = 0; k <= top; ++k) {
        const BigInt term = stirling1_unsigned(n, k) * stirling2(k, m);
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace mzeta
