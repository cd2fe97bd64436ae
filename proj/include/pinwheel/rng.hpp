#pragma once

#include "pinwheel/rational.hpp"

#include <cstdint>

namespace pinwheel {

// splitmix64: deterministic across platforms and standard-library versions,
// unlike std distributions. Used for the seeded replication/property suites,
// where byte-identical reports for equal seeds are part of the contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi]; modulo bias is irrelevant for sampling purposes.
    long long uniform_int(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    // Uniform-ish rational in [lo, hi] with denominator in [1, max_den].
    Rational uniform_rational(long long lo, long long hi, long long max_den) {
        const long long den = uniform_int(1, max_den);
        const long long num = uniform_int(lo * den, hi * den);
        return rat(num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace pinwheel
