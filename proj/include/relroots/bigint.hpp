#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <vector>

namespace relroots {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Coeffs = std::vector<Int>;

inline Int binomial(int n, int k) {
    if (k == 0) return 1;  // C(n,0) = 1 for every n, including negative
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace relroots
