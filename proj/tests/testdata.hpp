#pragma once

// Pinned coefficient tables. d_8 and d_9 are the published expansions; the
// smaller ones follow by hand from the recursion d_k = [k] d_{k-1} +
// (-1)^k q^{C(k,2)} and are confirmed against the enumeration oracle in the
// unit tests.

#include <vector>

#include "qderange/coeff_seq.hpp"

namespace testdata {

inline qderange::CoeffSeq make_seq(int n, const std::vector<long>& values) {
    qderange::CoeffSeq seq;
    seq.n = n;
    for (long v : values) seq.coeffs.emplace_back(v);
    return seq;
}

inline const std::vector<long> kD2 = {1};
inline const std::vector<long> kD3 = {1, 1};
inline const std::vector<long> kD4 = {1, 2, 2, 2, 1, 1};
inline const std::vector<long> kD5 = {1, 3, 5, 7, 8, 8, 6, 4, 2};
inline const std::vector<long> kD6 = {1, 4, 9, 16, 24, 32, 37, 38, 35, 28, 20, 12, 6, 2, 1};
inline const std::vector<long> kD7 = {1,   5,   14,  30,  54,  86, 123, 160, 191, 210,
                                      214, 202, 176, 141, 104, 69, 41,  21,  9,   3};
inline const std::vector<long> kD8 = {1,    6,    20,   50,   104,  190,  313,  473,  663, 868,
                                      1068, 1240, 1362, 1417, 1398, 1307, 1157, 968,  763, 564,
                                      388,  247,  143,  74,   33,   12,   3,    1};
inline const std::vector<long> kD9 = {1,     7,     27,    77,    181,  371,  684,  1157, 1820,
                                      2687,  3749,  4969,  6281,  7594, 8802, 9796, 10480,
                                      10785, 10680, 10176, 9324,  8209, 6935, 5611, 4337,
                                      3192,  2227,  1465,  901,   513,  266,  123,  49,   16, 4};

}  // namespace testdata
