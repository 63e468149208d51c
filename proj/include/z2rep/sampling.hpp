#pragma once

#include "z2rep/rational.hpp"

#include <cstdint>
#include <random>

namespace z2rep {

/// Reproducible rationals p/q with p in [-bound, bound] and q in [1, bound].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, int bound = 50) : engine_(seed), bound_(bound) {}

    Rational next();
    /// Nonzero draw.
    Rational next_nonzero();

private:
    std::mt19937_64 engine_;
    int bound_;
};

}  // namespace z2rep
