#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qderange/bigint.hpp"
#include "qderange/coeff_seq.hpp"

namespace qderange {

// Dense coefficient block starting at a known minimum exponent.
struct ShiftedSeq {
    long min_exp = 0;
    std::vector<BigInt> coeffs;

    bool operator==(const ShiftedSeq&) const = default;
};

// Sliding-window kernel behind every multiplication by a q-integer:
// out[j] = in[j-width+1] + ... + in[j]. One add and at most one subtract per
// output entry, so the cost is linear in the output length instead of
// width * length.
inline std::vector<BigInt> window_sums(std::span<const BigInt> in, long width) {
    if (width < 1) throw std::invalid_argument("window_sums: width must be >= 1");
    if (in.empty()) return {};
    const long in_len = static_cast<long>(in.size());
    const long out_len = in_len + width - 1;
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(out_len));
    BigInt window = 0;
    for (long j = 0; j < out_len; ++j) {
        if (j < in_len) window += in[static_cast<std::size_t>(j)];
        if (j >= width) window -= in[static_cast<std::size_t>(j - width)];
        out.push_back(window);
    }
    return out;
}

// f(q) * [n], where [n] = 1 + q + ... + q^{n-1}. The constant term of [n]
// keeps the minimum exponent unchanged.
inline ShiftedSeq mul_by_qint(const ShiftedSeq& f, long n) {
    for (const auto& c : f.coeffs)
        if (c < 0) throw std::invalid_argument("mul_by_qint: entries must be non-negative");
    return {f.min_exp, window_sums(f.coeffs, n)};
}

// d_k(q) = [k] d_{k-1}(q) + (-1)^k q^{C(k,2)}, iterated up from d_1 = 0.
// For even k the monomial extends the degree by one; for odd k it must cancel
// the product's top term exactly. That top term is 1 whenever the previous
// step was correct, and we check it rather than assume it.
inline CoeffSeq compute_recursive(int n) {
    if (n < 1) throw std::invalid_argument("compute_recursive: n must be >= 1");
    std::vector<BigInt> coeffs;  // exponents 1..degree
    for (int k = 2; k <= n; ++k) {
        coeffs = window_sums(coeffs, k);
        if (k % 2 == 0) {
            coeffs.emplace_back(1);
        } else {
            if (coeffs.empty() || coeffs.back() != 1)
                throw std::logic_error("compute_recursive: top term does not cancel to zero");
            coeffs.pop_back();
        }
        if (static_cast<long>(coeffs.size()) != degree_bound(k))
            throw std::logic_error("compute_recursive: degree drifted from beta_k");
    }
    CoeffSeq result{n, std::move(coeffs)};
    validate(result);
    return result;
}

// Wachs' alternating sum, with the [n]!/[k]! factor expanded division-free:
//   d_n(q) = sum_{k=0}^{n} (-1)^k q^{C(k,2)} prod_{j=k+1}^{n} [j].
// Intermediate sums are signed; the final coefficients must come out
// non-negative with zero constant term, which is checked before returning.
inline CoeffSeq compute_wachs(int n) {
    if (n < 1) throw std::invalid_argument("compute_wachs: n must be >= 1");
    const long top = binom2(n);
    std::vector<BigInt> acc(static_cast<std::size_t>(top) + 1);  // exponents 0..C(n,2)
    std::vector<BigInt> tail_product{1};  // prod_{j=k+1}^{n} [j], from exponent 0
    int sign = (n % 2 == 0) ? 1 : -1;     // (-1)^k, starting at k = n
    for (int k = n; k >= 0; --k) {
        const long shift = binom2(k);
        for (std::size_t i = 0; i < tail_product.size(); ++i) {
            if (sign > 0)
                acc[static_cast<std::size_t>(shift) + i] += tail_product[i];
            else
                acc[static_cast<std::size_t>(shift) + i] -= tail_product[i];
        }
        if (k > 0) {
            tail_product = window_sums(tail_product, k);
            sign = -sign;
        }
    }
    if (acc[0] != 0) throw std::logic_error("compute_wachs: constant term must vanish");
    const long beta = (n == 1) ? 0 : degree_bound(n);
    for (long e = beta + 1; e <= top; ++e)
        if (acc[static_cast<std::size_t>(e)] != 0)
            throw std::logic_error("compute_wachs: nonzero coefficient above beta_n");
    for (long e = 1; e <= beta; ++e)
        if (acc[static_cast<std::size_t>(e)] < 0)
            throw std::logic_error("compute_wachs: negative coefficient survived the signed sum");
    CoeffSeq result{n, std::vector<BigInt>(acc.begin() + 1, acc.begin() + 1 + beta)};
    validate(result);
    return result;
}

#ifdef NDEBUG
inline constexpr bool kRecurrenceOverlapChecks = false;
#else
inline constexpr bool kRecurrenceOverlapChecks = true;
#endif

// One step of the coefficient recurrence A_n -> A_{n+1}:
//   prefix sums            for 1     <= k <= n+1,
//   width-(n+1) windows    for n+1   <= k <= beta_n,
//   suffix sums            for beta_n <= k < beta_{n+1},
//   A_n(beta_n - 1) + A_n(beta_n)  at k = beta_{n+1}, n even,
//   1                              at k = beta_{n+1}, n odd.
// The stated ranges overlap at k = n+1 and k = beta_n (and, for even n, the
// suffix formula extends to k = beta_{n+1}); with `check_overlaps` every
// applicable branch is evaluated and must agree.
inline CoeffSeq coeff_recurrence_step(const CoeffSeq& prev,
                                      bool check_overlaps = kRecurrenceOverlapChecks) {
    const int n = prev.n;
    if (n < 2) throw std::invalid_argument("coeff_recurrence_step: requires n >= 2");
    const long bn = degree_bound(n);
    const long bn1 = degree_bound(n + 1);
    if (prev.degree() != bn)
        throw std::invalid_argument("coeff_recurrence_step: input length != beta_n");

    std::vector<BigInt> prefix(static_cast<std::size_t>(bn) + 1);  // prefix[k] = A_n(1)+...+A_n(k)
    for (long k = 1; k <= bn; ++k)
        prefix[static_cast<std::size_t>(k)] =
            prefix[static_cast<std::size_t>(k - 1)] + prev.at(k);
    auto range_sum = [&](long lo, long hi) -> BigInt {  // A_n(i) = 0 outside 1..beta_n
        lo = lo < 1 ? 1 : lo;
        hi = hi > bn ? bn : hi;
        if (hi < lo) return 0;
        return prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo - 1)];
    };
    auto coeff_or_zero = [&](long i) -> BigInt {
        return (i >= 1 && i <= bn) ? prev.at(i) : BigInt(0);
    };
    auto boundary = [&]() -> BigInt {
        return (n % 2 == 0) ? BigInt(coeff_or_zero(bn - 1) + coeff_or_zero(bn)) : BigInt(1);
    };

    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(bn1));
    for (long k = 1; k <= bn1; ++k) {
        BigInt value;
        if (k <= n + 1)
            value = range_sum(1, k);
        else if (k <= bn)
            value = range_sum(k - n, k);
        else if (k < bn1)
            value = range_sum(k - n, bn);
        else
            value = boundary();
        if (check_overlaps) {
            auto agree = [&](const BigInt& alt) {
                if (alt != value)
                    throw std::logic_error("coeff_recurrence_step: branches disagree at k = " +
                                           std::to_string(k));
            };
            if (k <= n + 1) agree(range_sum(1, k));
            if (k >= n + 1 && k <= bn) agree(range_sum(k - n, k));
            if (k >= bn && k < bn1) agree(range_sum(k - n, bn));
            if (k == bn1) {
                agree(boundary());
                if (n % 2 == 0) agree(range_sum(k - n, bn));
            }
        }
        out.push_back(std::move(value));
    }
    CoeffSeq result{n + 1, std::move(out)};
    validate_structure(result);
    return result;
}

}  // namespace qderange
