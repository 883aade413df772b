#pragma once

#include "wallx/laurent.hpp"

#include <cstdint>
#include <random>

namespace wallx {

// Deterministic source of small rationals. mt19937_64 output is pinned by the
// standard and we reduce by modulo ourselves, so the same seed yields the same
// sequence on every platform (the library distributions make no such promise).
class SmallRationalSampler {
public:
    explicit SmallRationalSampler(uint64_t seed) : gen_(seed) {}

    uint64_t raw() { return gen_(); }

    long pick(long lo, long hi) { // inclusive
        uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(gen_() % span);
    }

    // Numerator in +-1..9, denominator in 1..3. Never zero.
    Rational nonzero_rational() {
        long num = pick(1, 9);
        if (gen_() & 1) num = -num;
        long den = pick(1, 3);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    TorusPoint torus_point(int num_vars) {
        std::vector<Rational> c;
        c.reserve(num_vars);
        for (int i = 0; i < num_vars; ++i) c.push_back(nonzero_rational());
        return TorusPoint(std::move(c));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace wallx
