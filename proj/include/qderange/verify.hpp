#pragma once

#include <cassert>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qderange/bigint.hpp"
#include "qderange/coeff_seq.hpp"
#include "qderange/errors.hpp"

namespace qderange {

// Pairing scheme behind the ratio-monotone chains of d_n(q), n >= 6.
//
//   n odd:  partner(i) = beta_n + 1 - i; every coefficient participates.
//   n even: partner(i) = beta_n - i; the final coefficient A_n(beta_n) = 1
//           is excluded (it ties with A_n(1), so no strict chain could
//           contain it).
//
// Equivalently: drop the last coefficient when n is even, and the paired
// prefix of length L obeys the generic pairing i <-> L + 1 - i. The midpoint
// r depends on the residue of n mod 4:
//   r = n(n-1)/4      for n = 0, 1 (mod 4)   (partner(r) = r),
//   r = (n(n-1)-2)/4  for n = 2, 3 (mod 4)   (partner(r) = r + 1).
struct RatioLayout {
    int n = 0;
    int residue = 0;  // n mod 4
    long beta = 0;
    long r = 0;
    long partner_offset = 0;  // partner(i) = partner_offset - i
    bool excludes_last = false;

    long partner(long i) const { return partner_offset - i; }

    // Number of leading coefficients that participate in the pairing.
    long paired_length() const { return excludes_last ? beta - 1 : beta; }

    // Index of the unique maximum coefficient. The chains end with
    // A(r-1)/A(r+1) < 1 for residues 0 and 1 (peak at r) but with
    // A(r)/A(r+1) < 1 for residues 2 and 3 (peak at r + 1).
    long peak_index() const { return (residue == 0 || residue == 1) ? r : r + 1; }

    // Last index of chain A: pairs (i, partner(i)) exist while i < partner(i).
    long chain_a_last() const { return (residue == 0 || residue == 1) ? r - 1 : r; }
    // Last index of chain B: terms partner(i)/A(i+1) exist while partner(i) > i + 1.
    long chain_b_last() const { return r - 1; }
};

inline RatioLayout ratio_layout(int n) {
    if (n < 6) throw scope_error("ratio_layout: the ratio-monotone structure starts at n = 6");
    RatioLayout layout;
    layout.n = n;
    layout.residue = n % 4;
    layout.beta = degree_bound(n);
    const long t = static_cast<long>(n) * (n - 1);
    if (layout.residue == 0 || layout.residue == 1) {
        if (t % 4 != 0) throw std::logic_error("ratio_layout: n(n-1)/4 not an integer");
        layout.r = t / 4;
    } else {
        if ((t - 2) % 4 != 0) throw std::logic_error("ratio_layout: (n(n-1)-2)/4 not an integer");
        layout.r = (t - 2) / 4;
    }
    layout.excludes_last = (n % 2 == 0);
    layout.partner_offset = layout.excludes_last ? layout.beta : layout.beta + 1;
    return layout;
}

// One exact ratio; comparisons happen on integer cross-products only.
struct RatioTerm {
    BigInt num, den;

    bool operator==(const RatioTerm&) const = default;
};

// Witness of the first failed comparison: the two integer sides that were
// required to satisfy left < right.
struct Violation {
    long index = 0;
    BigInt left, right;
};

struct PropertyReport {
    std::string property;
    bool pass = true;  // true iff first_violation is absent
    std::optional<Violation> first_violation;
    std::vector<RatioTerm> chain_a, chain_b;  // populated by the ratio checks

    PropertyReport() = default;
    explicit PropertyReport(std::string name) : property(std::move(name)) {}

    void fail(long index, BigInt left, BigInt right) {
        if (!pass) return;
        pass = false;
        first_violation = Violation{index, std::move(left), std::move(right)};
    }
};

namespace detail {
inline void require_positive(std::span<const BigInt> a, const char* who) {
    if (a.empty()) throw std::invalid_argument(std::string(who) + ": empty sequence");
    for (const auto& x : a)
        if (x <= 0) throw std::invalid_argument(std::string(who) + ": entries must be positive");
}
}  // namespace detail

// The two cross-pair ratio chains of a positive sequence a_1..a_L with the
// generic pairing partner(i) = L + 1 - i:
//   chain A: a_i / a_{partner(i)}     for i = 1..floor(L/2),     increasing, last < 1;
//   chain B: a_{partner(i)} / a_{i+1} for i = 1..floor((L-1)/2), increasing, last < 1.
// A violation's index is the chain position at which monotonicity (or the
// final < 1 bound) breaks.
inline PropertyReport check_ratio_monotone_paired(std::span<const BigInt> a,
                                                  std::string property = "ratio-monotone") {
    detail::require_positive(a, "check_ratio_monotone_paired");
    const long len = static_cast<long>(a.size());
    if (len < 3)
        throw std::invalid_argument("check_ratio_monotone_paired: needs at least 3 entries");
    auto at = [&](long i) -> const BigInt& { return a[static_cast<std::size_t>(i - 1)]; };

    PropertyReport report{std::move(property)};
    for (long i = 1; i <= len / 2; ++i) report.chain_a.push_back({at(i), at(len + 1 - i)});
    for (long i = 1; i <= (len - 1) / 2; ++i) report.chain_b.push_back({at(len + 1 - i), at(i + 1)});

    auto check_chain = [&report](const std::vector<RatioTerm>& chain) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            BigInt left = chain[i].num * chain[i + 1].den;
            BigInt right = chain[i + 1].num * chain[i].den;
            if (!(left < right)) {
                report.fail(static_cast<long>(i) + 1, std::move(left), std::move(right));
                return;
            }
        }
        const RatioTerm& last = chain.back();
        if (!(last.num < last.den))
            report.fail(static_cast<long>(chain.size()), last.num, last.den);
    };
    check_chain(report.chain_a);
    check_chain(report.chain_b);
    return report;
}

// Interlaced reading order 1, L, 2, L-1, 3, ... of a_1..a_L.
inline std::vector<long> spiral_order(long len) {
    std::vector<long> order;
    order.reserve(static_cast<std::size_t>(len));
    for (long i = 1; i <= len + 1 - i; ++i) {
        order.push_back(i);
        if (len + 1 - i > i) order.push_back(len + 1 - i);
    }
    return order;
}

// Spiral property: the interlaced chain strictly increases. A violation's
// index is the position in the interlaced chain; left/right are the two
// adjacent values that failed to increase.
inline PropertyReport check_spiral_paired(std::span<const BigInt> a,
                                          std::string property = "spiral") {
    detail::require_positive(a, "check_spiral_paired");
    const auto order = spiral_order(static_cast<long>(a.size()));
    PropertyReport report{std::move(property)};
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const BigInt& lhs = a[static_cast<std::size_t>(order[i] - 1)];
        const BigInt& rhs = a[static_cast<std::size_t>(order[i + 1] - 1)];
        if (!(lhs < rhs)) {
            report.fail(static_cast<long>(i) + 1, lhs, rhs);
            break;
        }
    }
    return report;
}

// Strict log-concavity a_{k-1} a_{k+1} < a_k^2 for every k in [k_lo, k_hi].
// A violation stores left = a_{k-1} a_{k+1} and right = a_k^2.
inline PropertyReport check_log_concave_range(std::span<const BigInt> a, long k_lo, long k_hi,
                                              std::string property = "log-concave") {
    detail::require_positive(a, "check_log_concave_range");
    const long len = static_cast<long>(a.size());
    if (k_lo < 2 || k_hi > len - 1)
        throw std::invalid_argument("check_log_concave_range: triple range outside 2..len-1");
    auto at = [&](long i) -> const BigInt& { return a[static_cast<std::size_t>(i - 1)]; };
    PropertyReport report{std::move(property)};
    for (long k = k_lo; k <= k_hi; ++k) {
        BigInt left = at(k - 1) * at(k + 1);
        BigInt right = at(k) * at(k);
        if (!(left < right)) {
            report.fail(k, std::move(left), std::move(right));
            break;
        }
    }
    return report;
}

// Unimodality with a pinned peak: strict rise up to `peak`, weak fall after,
// and the maximum attained nowhere else. A violation stores the adjacent
// pair (a_i, a_{i+1}) that breaks the shape.
inline PropertyReport check_unimodal_peak(std::span<const BigInt> a, long peak,
                                          std::string property = "unimodal-peak") {
    detail::require_positive(a, "check_unimodal_peak");
    const long len = static_cast<long>(a.size());
    if (peak < 1 || peak > len)
        throw std::invalid_argument("check_unimodal_peak: peak outside the sequence");
    auto at = [&](long i) -> const BigInt& { return a[static_cast<std::size_t>(i - 1)]; };
    PropertyReport report{std::move(property)};
    for (long i = 1; i < peak; ++i)
        if (!(at(i) < at(i + 1))) {
            report.fail(i, at(i), at(i + 1));
            return report;
        }
    if (peak < len && !(at(peak + 1) < at(peak))) {  // peak must be strict on the right
        report.fail(peak, at(peak), at(peak + 1));
        return report;
    }
    for (long i = peak + 1; i < len; ++i)
        if (at(i) < at(i + 1)) {
            report.fail(i, at(i), at(i + 1));
            return report;
        }
    return report;
}

namespace detail {
inline std::span<const BigInt> paired_span(const CoeffSeq& seq, const RatioLayout& layout) {
    if (seq.degree() != layout.beta)
        throw std::invalid_argument("verifier: sequence length != beta_n for its order");
    return std::span<const BigInt>(seq.coeffs).first(
        static_cast<std::size_t>(layout.paired_length()));
}
}  // namespace detail

// The four-case ratio-monotone statement for d_n(q), n >= 6. The residue
// cases collapse onto the generic pairing of the paired prefix.
inline PropertyReport verify_ratio_monotone(const CoeffSeq& seq) {
    const RatioLayout layout = ratio_layout(seq.n);
    const auto paired = detail::paired_span(seq, layout);
    assert(layout.partner_offset == static_cast<long>(paired.size()) + 1);
    assert(layout.chain_a_last() == static_cast<long>(paired.size()) / 2);
    assert(layout.chain_b_last() == (static_cast<long>(paired.size()) - 1) / 2);
    return check_ratio_monotone_paired(paired);
}

// Interlacing chain A(1) < A(partner(1)) < A(2) < ... over the paired prefix.
inline PropertyReport verify_spiral(const CoeffSeq& seq) {
    const RatioLayout layout = ratio_layout(seq.n);
    return check_spiral_paired(detail::paired_span(seq, layout));
}

// Strict rise to the layout's peak index and fall after it, over the full
// coefficient range (for even n the final step A(beta-1) > A(beta) = 1 is
// part of the fall).
inline PropertyReport verify_unimodal_peak(const CoeffSeq& seq) {
    const RatioLayout layout = ratio_layout(seq.n);
    if (seq.degree() != layout.beta)
        throw std::invalid_argument("verify_unimodal_peak: sequence length != beta_n");
    return check_unimodal_peak(seq.coeffs, layout.peak_index());
}

// Log-concavity over indices 1..n(n-1)/2 - 1. For odd n that is the whole
// sequence; for even n it stops short of the final coefficient, and the
// skipped tail must genuinely break log-concavity there:
// A(beta-1)^2 < A(beta-2) A(beta).
inline PropertyReport verify_log_concave(const CoeffSeq& seq) {
    const RatioLayout layout = ratio_layout(seq.n);
    if (seq.degree() != layout.beta)
        throw std::invalid_argument("verify_log_concave: sequence length != beta_n");
    const long chain_end = binom2(seq.n) - 1;
    PropertyReport report = check_log_concave_range(seq.coeffs, 2, chain_end - 1, "log-concave");
    if (report.pass && layout.excludes_last) {
        const long b = layout.beta;
        BigInt left = seq.at(b - 1) * seq.at(b - 1);
        BigInt right = seq.at(b - 2) * seq.at(b);
        if (!(left < right)) report.fail(b - 1, std::move(left), std::move(right));
    }
    return report;
}

// Closed forms for the coefficients nearest both ends, for even n >= 6:
//   A(2) = n-2, A(3) = n(n-3)/2, A(4) = (n-2)(n+2)(n-3)/6,
//   A(beta-1) = n/2 - 1, A(beta-2) = n^2/4 - n/2,
//   A(beta-3) = n^3/12 - n^2/8 - n/12 - 1, plus A(1) = A(beta) = 1.
// A violation stores left = actual, right = expected.
inline PropertyReport verify_lemma2(const CoeffSeq& seq) {
    const int n = seq.n;
    if (n < 6 || n % 2 != 0)
        throw scope_error("verify_lemma2: the closed forms hold for even n >= 6");
    const long b = degree_bound(n);
    if (seq.degree() != b) throw std::invalid_argument("verify_lemma2: sequence length != beta_n");
    const BigInt m = n;
    const std::pair<long, BigInt> expected[] = {
        {1, 1},
        {2, m - 2},
        {3, exact_div(m * (m - 3), 2)},
        {4, exact_div((m - 2) * (m + 2) * (m - 3), 6)},
        {b, 1},
        {b - 1, exact_div(m, 2) - 1},
        {b - 2, exact_div(m * m, 4) - exact_div(m, 2)},
        {b - 3, exact_div(2 * m * m * m - 3 * m * m - 2 * m, 24) - 1},
    };
    PropertyReport report{"lemma2-closed-forms"};
    for (const auto& [index, value] : expected)
        if (seq.at(index) != value) {
            report.fail(index, seq.at(index), value);
            break;
        }
    return report;
}

// Sum-ratio lemma: positive a_1..a_{k+1}, b_1..b_{k+1} with b_i/a_i strictly
// increasing imply three inequalities between partial-sum ratios:
//   (1) sum_k b / (sum_k a + 1)  <  sum_{k+1} b / (sum_{k+1} a + 1),
//   (2) sum_k b / sum_k a        <  sum_{k+1} b / sum_{k+1} a,
//   (3) sum_k b / sum_k a        <  (that sum shifted one term right).
// Inputs violating the premise are rejected with premise_error. A
// violation's index names the inequality (1..3); left/right are the integer
// cross-products.
inline PropertyReport check_lemma1(std::span<const BigRational> a,
                                   std::span<const BigRational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("check_lemma1: length mismatch");
    if (a.size() < 2) throw std::invalid_argument("check_lemma1: needs at least k+1 = 2 terms");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] <= 0 || b[i] <= 0)
            throw std::invalid_argument("check_lemma1: entries must be positive");
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (!(b[i] / a[i] < b[i + 1] / a[i + 1]))
            throw premise_error("check_lemma1: b_i/a_i is not strictly increasing at i = " +
                                std::to_string(i + 1));

    const std::size_t k = a.size() - 1;
    BigRational sum_a = 0, sum_b = 0;
    for (std::size_t i = 0; i < k; ++i) {
        sum_a += a[i];
        sum_b += b[i];
    }
    const BigRational sum_a_full = sum_a + a[k], sum_b_full = sum_b + b[k];

    PropertyReport report{"lemma1"};
    auto check = [&report](long which, const BigRational& lhs, const BigRational& rhs) {
        if (!report.pass) return;
        if (!(lhs < rhs))
            report.fail(which, numerator(lhs) * denominator(rhs),
                        numerator(rhs) * denominator(lhs));
    };
    check(1, sum_b / (sum_a + 1), sum_b_full / (sum_a_full + 1));
    check(2, sum_b / sum_a, sum_b_full / sum_a_full);
    check(3, sum_b / sum_a, (sum_b_full - b[0]) / (sum_a_full - a[0]));
    return report;
}

}  // namespace qderange
