#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace qderange {

// All arithmetic in this library is exact. Coefficients reach thousands of
// decimal digits for large n, so everything runs on arbitrary-precision
// integers; ratios are never materialized as floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// C(n,2) = n(n-1)/2.
inline long binom2(long n) { return n * (n - 1) / 2; }

// Quotient of a division that must be exact; a remainder means the caller's
// formula is wrong.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(num, den, quotient, remainder);
    if (remainder != 0) throw std::logic_error("exact_div: division left a remainder");
    return quotient;
}

}  // namespace qderange
