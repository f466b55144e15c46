#pragma once

// Umbrella header: exact q-derangement polynomials d_n(q), their generators,
// the enumeration oracle, and verifiers for the coefficient structure.

#include "qderange/bigint.hpp"
#include "qderange/coeff_seq.hpp"
#include "qderange/errors.hpp"
#include "qderange/io.hpp"
#include "qderange/oracle.hpp"
#include "qderange/qpoly.hpp"
#include "qderange/verify.hpp"

namespace qderange {

// Compute d_n(q) by the chosen method. The oracle respects its cap; the
// coefficient recurrence iterates up from d_2(q) = q.
inline CoeffSeq compute(int n, Method method, int oracle_cap = kDefaultOracleCap) {
    switch (method) {
        case Method::Recursive: return compute_recursive(n);
        case Method::Wachs: return compute_wachs(n);
        case Method::Oracle: return oracle_dn(n, oracle_cap);
        case Method::CoeffRecurrence: {
            if (n < 1) throw std::invalid_argument("compute: n must be >= 1");
            if (n == 1) return CoeffSeq{1, {}};
            CoeffSeq seq{2, {BigInt(1)}};  // d_2(q) = q
            while (seq.n < n) seq = coeff_recurrence_step(seq);
            validate(seq);
            return seq;
        }
    }
    throw std::logic_error("compute: bad method enum");
}

}  // namespace qderange
