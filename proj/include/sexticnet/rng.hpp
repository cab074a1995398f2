#pragma once

#include <cstdint>

#include "sexticnet/scalar.hpp"

namespace sexticnet {

// splitmix64: tiny, platform-independent stream so that every "random" choice
// in the library is reproducible from the seed echoed in reports.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t n) { return next() % n; }

    // Uniform in [lo, hi], inclusive.
    long int_in(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }

    // Small nonzero integer in [-bound, bound].
    long nonzero_int(long bound) {
        long v = int_in(1, bound);
        return below(2) ? v : -v;
    }

    Scalar rational(long bound) { return Scalar::fraction(int_in(-bound, bound), int_in(1, bound)); }

    Scalar nonzero_rational(long bound) { return Scalar::fraction(nonzero_int(bound), int_in(1, bound)); }

    // Random 31-bit prime (2^30 < p < 2^31).
    uint64_t prime31() {
        for (;;) {
            uint64_t c = (1ull << 30) + below(1ull << 30) + 1;
            c |= 1;
            if (is_prime(c)) return c;
        }
    }

    // Random 31-bit prime with p = 1 mod 3 (so F_p contains a cube root of unity).
    uint64_t prime31_1mod3() {
        for (;;) {
            uint64_t p = prime31();
            if (p % 3 == 1) return p;
        }
    }

private:
    uint64_t state_;
};

}  // namespace sexticnet
