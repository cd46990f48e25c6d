#pragma once

#include <cstdint>
#include <random>

#include "ncalc/rational.hpp"

namespace ncalc {

// mt19937_64 with explicit range reduction so draws are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 1) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    // uniform-ish integer in [lo, hi]
    long uniform(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(gen_() % span);
    }
    bool coin() { return (gen_() >> 17) & 1U; }
    // small nonzero-biased rational
    Rational small_rational(long range = 3) {
        long num = uniform(-range, range);
        long den = uniform(1, 2);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational nonzero_rational(long range = 3) {
        Rational q = 0;
        while (is_zero(q)) q = small_rational(range);
        return q;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace ncalc
