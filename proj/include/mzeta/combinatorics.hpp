#pragma once

#include <cstddef>
#include <shared_mutex>
#include <span>
#include <vector>

#include "mzeta/bigrational.hpp"

namespace mzeta {

enum class StirlingKind { FirstUnsigned, Second };

/// Lazily grown triangle of Stirling numbers. Row n holds k = 0..n.
///
/// Extension only appends rows, so entries already handed out never change.
/// Concurrent lookups are allowed; growth takes an exclusive lock.
class StirlingTable {
public:
    explicit StirlingTable(StirlingKind kind) : kind_(kind) { rows_.push_back({BigInt(1)}); }

    StirlingKind kind() const { return kind_; }

    /// Entry (n, k); zero when k > n.
    BigInt at(unsigned n, unsigned k) const;

    /// Highest row currently materialized.
    unsigned max_n() const;

    /// Copy of row n (k = 0..n), growing the table if needed.
    std::vector<BigInt> row(unsigned n) const;

private:
    void ensure(unsigned n) const;

    StirlingKind kind_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<std::vector<BigInt>> rows_;
};

/// Stirling numbers of the second kind, S(n,k) = k S(n-1,k) + S(n-1,k-1).
BigInt stirling2(unsigned n, unsigned k);

/// Unsigned Stirling numbers of the first kind, c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
BigInt stirling1_unsigned(unsigned n, unsigned k);

/// Process-wide memo tables behind stirling1_unsigned / stirling2.
const StirlingTable& stirling_table(StirlingKind kind);

BigInt binomial(unsigned n, unsigned k);

/// n! / prod(parts_i!). Throws Error(InvalidArgument) when the parts do not sum to n.
BigInt multinomial(unsigned n, std::span<const unsigned> parts);

/// Raw alternating sum  sum_k (-1)^k c(n,k) S(k,m); (-1)^n delta_{n,m} when orthogonality holds.
BigInt kronecker_orthogonality(unsigned n, unsigned m);

/// Calls fn(parts) for each weak composition of n into d nonnegative parts, lexicographic order.
template <class Fn>
void for_each_composition(unsigned n, std::size_t d, Fn&& fn) {
    if (d == 0) {
        if (n == 0) fn(std::span<const unsigned>{});
        return;
    }
    std::vector<unsigned> parts(d, 0);
    parts[d - 1] = n;
    while (true) {
        fn(std::span<const unsigned>(parts));
        // Successor: move one unit left from the rightmost nonzero part (index >= 1),
        // and pour the rest of that part into the last slot.
        std::size_t j = d - 1;
        while (j > 0 && parts[j] == 0) --j;
        if (j == 0) return;
        const unsigned v = parts[j];
        parts[j] = 0;
        ++parts[j - 1];
        parts[d - 1] = v - 1;
    }
}

}  // namespace mzeta
