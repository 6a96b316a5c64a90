#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace lmn {

/// Exact arbitrary-precision integer. All coefficient arithmetic in this
/// library is exact; there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k), n >= 0. Returns 0 for k < 0 or k > n.
inline Integer binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer c = 1;
    // c stays integral at every step: after the i-th iteration c = C(n-k+i, i)
    for (long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

}  // namespace lmn
