#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qderange/bigint.hpp"

namespace qderange {

// Which generator produced a coefficient sequence.
enum class Method { Recursive, Wachs, Oracle, CoeffRecurrence };

inline std::string_view to_string(Method m) {
    switch (m) {
        case Method::Recursive: return "recursive";
        case Method::Wachs: return "wachs";
        case Method::Oracle: return "oracle";
        case Method::CoeffRecurrence: return "coeff-recurrence";
    }
    throw std::logic_error("to_string(Method): bad enum value");
}

inline Method method_from_string(std::string_view s) {
    if (s == "recursive") return Method::Recursive;
    if (s == "wachs") return Method::Wachs;
    if (s == "oracle") return Method::Oracle;
    if (s == "coeff-recurrence") return Method::CoeffRecurrence;
    throw std::invalid_argument("unknown method '" + std::string(s) +
                                "' (want recursive|wachs|oracle|coeff-recurrence)");
}

// Degree of d_n(q): C(n,2) for even n, C(n,2) - 1 for odd n. The zero
// polynomial d_1(q) has no degree in this indexing; callers special-case it.
inline long degree_bound(int n) {
    if (n < 2) throw std::invalid_argument("degree_bound: defined for n >= 2");
    const long b = binom2(n);
    return (n % 2 == 0) ? b : b - 1;
}

// Classical derangement count, via D_n = n * D_{n-1} + (-1)^n from D_1 = 0.
inline BigInt derangement_count(int n) {
    if (n < 1) throw std::invalid_argument("derangement_count: n must be >= 1");
    BigInt d = 0;
    for (int k = 2; k <= n; ++k) {
        d *= k;
        d += (k % 2 == 0) ? 1 : -1;
    }
    return d;
}

// Coefficients of d_n(q) = A_n(1) q + A_n(2) q^2 + ... + A_n(beta_n) q^{beta_n}.
// coeffs[k-1] holds A_n(k); the constant term is always zero and not stored.
// d_1(q) = 0 is the empty sequence.
struct CoeffSeq {
    int n = 0;
    std::vector<BigInt> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()); }

    // 1-based access: A_n(k).
    const BigInt& at(long k) const {
        if (k < 1 || k > degree()) throw std::out_of_range("CoeffSeq::at: index outside 1..degree");
        return coeffs[static_cast<std::size_t>(k - 1)];
    }

    // d_n(1), which must equal the derangement count D_n.
    BigInt eval_at_one() const {
        BigInt sum = 0;
        for (const auto& c : coeffs) sum += c;
        return sum;
    }

    bool operator==(const CoeffSeq&) const = default;
};

// Cheap shape invariants: length beta_n, A_n(1) = 1, strict positivity.
inline void validate_structure(const CoeffSeq& seq) {
    if (seq.n < 1) throw std::logic_error("CoeffSeq: n must be positive");
    if (seq.n == 1) {
        if (!seq.coeffs.empty()) throw std::logic_error("CoeffSeq: d_1(q) = 0 must be empty");
        return;
    }
    if (seq.degree() != degree_bound(seq.n))
        throw std::logic_error("CoeffSeq: length " + std::to_string(seq.degree()) +
                               " != beta_" + std::to_string(seq.n));
    if (seq.coeffs.front() != 1) throw std::logic_error("CoeffSeq: A_n(1) must be 1");
    for (const auto& c : seq.coeffs)
        if (c <= 0) throw std::logic_error("CoeffSeq: coefficients must be strictly positive");
}

// Full invariants, including the q = 1 evaluation. Generators run this on
// their results; a throw here means the generator is wrong, not the input.
inline void validate(const CoeffSeq& seq) {
    validate_structure(seq);
    if (seq.n >= 2 && seq.eval_at_one() != derangement_count(seq.n))
        throw std::logic_error("CoeffSeq: evaluation at q = 1 does not equal D_n");
}

}  // namespace qderange
