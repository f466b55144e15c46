#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qderange/bigint.hpp"
#include "qderange/coeff_seq.hpp"
#include "qderange/errors.hpp"

namespace qderange {

// Guard for the factorial enumeration. n = 10 takes about a second; n = 11
// minutes. Raise the cap explicitly when you mean it.
inline constexpr int kDefaultOracleCap = 10;

// One-line notation: one_line[i-1] is the image of i.
struct Permutation {
    std::vector<int> one_line;
};

inline bool is_valid_permutation(const Permutation& p) {
    const int n = static_cast<int>(p.one_line.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : p.one_line) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

namespace detail {
inline void require_permutation(const Permutation& p) {
    if (!is_valid_permutation(p))
        throw std::invalid_argument("expected a permutation of 1..n in one-line notation");
}

// Depth-first placement, never on the diagonal. The major index accumulates
// as descents become known: placing v at 1-based position pos+1 after
// prev below it contributes pos.
inline void enumerate_derangements(int n, int pos, int prev, std::uint64_t used, long maj,
                                   std::vector<BigInt>& counts) {
    if (pos == n) {
        counts[static_cast<std::size_t>(maj)] += 1;
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (v == pos + 1) continue;  // fixed point
        const std::uint64_t bit = std::uint64_t(1) << v;
        if (used & bit) continue;
        const long maj_next = (pos > 0 && prev > v) ? maj + pos : maj;
        enumerate_derangements(n, pos + 1, v, used | bit, maj_next, counts);
    }
}
}  // namespace detail

// True iff p(i) != i for all i.
inline bool is_derangement(const Permutation& p) {
    detail::require_permutation(p);
    for (std::size_t i = 0; i < p.one_line.size(); ++i)
        if (p.one_line[i] == static_cast<int>(i) + 1) return false;
    return true;
}

// Sum of the descent positions: 1-based positions i with p(i) > p(i+1).
inline long major_index(const Permutation& p) {
    detail::require_permutation(p);
    long maj = 0;
    for (std::size_t i = 1; i < p.one_line.size(); ++i)
        if (p.one_line[i - 1] > p.one_line[i]) maj += static_cast<long>(i);
    return maj;
}

// d_n(q) by definition: enumerate the fixed-point-free permutations of
// {1..n} and accumulate q^{maj}. Ground truth for everything else.
inline CoeffSeq oracle_dn(int n, int cap = kDefaultOracleCap) {
    if (n < 1) throw std::invalid_argument("oracle_dn: n must be >= 1");
    if (n > cap)
        throw resource_limit_error("oracle_dn: n = " + std::to_string(n) +
                                   " exceeds the enumeration cap " + std::to_string(cap) +
                                   " (the search is factorial; raise the cap explicitly)");
    if (n > 63) throw resource_limit_error("oracle_dn: n > 63 is not enumerable");
    if (n == 1) return CoeffSeq{1, {}};
    std::vector<BigInt> counts(static_cast<std::size_t>(binom2(n)) + 1);
    detail::enumerate_derangements(n, 0, 0, 0, 0, counts);
    if (counts[0] != 0) throw std::logic_error("oracle_dn: a derangement cannot be descent-free");
    const long beta = degree_bound(n);
    for (long e = beta + 1; e < static_cast<long>(counts.size()); ++e)
        if (counts[static_cast<std::size_t>(e)] != 0)
            throw std::logic_error("oracle_dn: major index above beta_n");
    CoeffSeq result{n, std::vector<BigInt>(counts.begin() + 1, counts.begin() + 1 + beta)};
    validate(result);
    return result;
}

}  // namespace qderange
