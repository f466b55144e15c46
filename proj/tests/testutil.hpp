#pragma once

// Deterministic random generators shared by the property tests and the
// acceptance suite.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qderange/bigint.hpp"
#include "qderange/verify.hpp"

namespace testutil {

inline constexpr std::uint64_t kSeed = 0x9d2c5680u;

// A positive integer sequence satisfying the ratio-monotone property by
// construction. The interlaced chain c_1 < c_2 < ... < c_L is built from
// exact consecutive ratios c_k / c_{k+1} = num_k / M, where the ratios at
// odd positions (chain A) and even positions (chain B) are each strictly
// increasing and below 1; scaling by M^{L-1} clears every denominator.
inline std::vector<qderange::BigInt> make_ratio_monotone_seq(std::mt19937_64& rng) {
    using qderange::BigInt;
    constexpr long kScale = 1'000'000;
    std::uniform_int_distribution<long> len_dist(5, 40);
    const long len = len_dist(rng);
    const long chain_a_len = len / 2;
    const long chain_b_len = (len - 1) / 2;

    auto draw_increasing = [&rng](long count) {
        std::uniform_int_distribution<long> dist(1, kScale - 1);
        std::set<long> values;
        while (static_cast<long>(values.size()) < count) values.insert(dist(rng));
        return std::vector<long>(values.begin(), values.end());
    };
    const std::vector<long> chain_a_nums = draw_increasing(chain_a_len);
    const std::vector<long> chain_b_nums = draw_increasing(chain_b_len);

    std::vector<long> ratio_nums;  // interlaced: u_1, v_1, u_2, v_2, ...
    for (long i = 0; i < len - 1; ++i)
        ratio_nums.push_back(i % 2 == 0 ? chain_a_nums[static_cast<std::size_t>(i / 2)]
                                        : chain_b_nums[static_cast<std::size_t>(i / 2)]);

    // c_k = M^{k-1} * prod_{j>=k} num_j, so c_k / c_{k+1} = num_k / M exactly.
    std::vector<BigInt> chain(static_cast<std::size_t>(len) + 1);
    BigInt suffix = 1;
    BigInt scale_power = boost::multiprecision::pow(BigInt(kScale), static_cast<unsigned>(len - 1));
    for (long k = len; k >= 1; --k) {
        chain[static_cast<std::size_t>(k)] = scale_power * suffix;
        scale_power /= kScale;
        if (k >= 2) suffix *= ratio_nums[static_cast<std::size_t>(k - 2)];
    }

    const std::vector<long> order = qderange::spiral_order(len);
    std::vector<BigInt> seq(static_cast<std::size_t>(len));
    for (long k = 0; k < len; ++k)
        seq[static_cast<std::size_t>(order[static_cast<std::size_t>(k)] - 1)] =
            chain[static_cast<std::size_t>(k + 1)];
    return seq;
}

struct Lemma1Input {
    std::vector<qderange::BigRational> a, b;
};

// Random positive integer pairs (a_i, b_i) with b_i/a_i strictly increasing:
// draw, sort by exact ratio, and replace ties until the length is reached.
inline Lemma1Input make_lemma1_input(std::mt19937_64& rng, long max_len = 20,
                                     long max_value = 1'000'000) {
    std::uniform_int_distribution<long> len_dist(2, max_len);
    std::uniform_int_distribution<long> value_dist(1, max_value);
    const long len = len_dist(rng);

    auto ratio_less = [](const std::pair<long, long>& x, const std::pair<long, long>& y) {
        return x.second * y.first < y.second * x.first;  // b_x/a_x < b_y/a_y
    };
    std::vector<std::pair<long, long>> pairs;  // (a_i, b_i)
    while (static_cast<long>(pairs.size()) < len) {
        while (static_cast<long>(pairs.size()) < len)
            pairs.emplace_back(value_dist(rng), value_dist(rng));
        std::sort(pairs.begin(), pairs.end(), ratio_less);
        pairs.erase(std::unique(pairs.begin(), pairs.end(),
                                [&](const auto& x, const auto& y) {
                                    return !ratio_less(x, y) && !ratio_less(y, x);
                                }),
                    pairs.end());
    }

    Lemma1Input input;
    for (const auto& [a, b] : pairs) {
        input.a.emplace_back(a);
        input.b.emplace_back(b);
    }
    return input;
}

}  // namespace testutil
