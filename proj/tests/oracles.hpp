#pragma once

// Test-side oracles, written against plain long long so they share no code
// (and no failure modes) with the library's arithmetic.

#include <vector>

namespace oracles {

// All (d, m1..mk) with every coefficient in [-bound, bound] satisfying
// d^2 - sum(m_i^2) = square and 3d + sum(m_i) = c1. The odometer ticks the
// last coordinate fastest, so output is already lexicographically sorted.
inline std::vector<std::vector<long long>> boxed_classes(int k, long long square,
                                                         long long c1, long long bound) {
    std::vector<std::vector<long long>> found;
    std::vector<long long> v(static_cast<std::size_t>(k) + 1, -bound);
    while (true) {
        long long sq = v[0] * v[0];
        long long ch = 3 * v[0];
        for (int i = 1; i <= k; ++i) {
            sq -= v[i] * v[i];
            ch += v[i];
        }
        if (sq == square && ch == c1)
            found.push_back(v);
        int pos = k;
        while (pos >= 0 && v[pos] == bound)
            v[pos--] = -bound;
        if (pos < 0)
            break;
        ++v[pos];
    }
    return found;
}

} // namespace oracles
