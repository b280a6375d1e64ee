#pragma once

#include "pencil/rational.hpp"

#include <cstdint>
#include <limits>
#include <random>

namespace pencil {

// Seeded source of small integers. mt19937_64 output is fixed by the
// standard; the range reduction below is too, so draws are reproducible
// across standard library implementations.
class IntegerSource {
public:
    explicit IntegerSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % span);
        std::uint64_t draw = engine_();
        while (draw >= limit) {
            draw = engine_();
        }
        return lo + static_cast<long>(draw % span);
    }

    /// Nonzero rational p/q with |p| <= bound, 1 <= q <= bound.
    Rational nonzero_rational(long bound)
    {
        long p = 0;
        while (p == 0) {
            p = uniform(-bound, bound);
        }
        return Rational(p, uniform(1, bound));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace pencil
