#pragma once

#include <cstdint>

#include "dit/nat.hpp"

namespace dit {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    bool next_bit() { return (next() >> 63) != 0; }

    /// Uniform in [0, bound) by rejection. bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [0, 2^i]. Draws i+1 random bits (low word first) and
    /// rejects values above 2^i.
    Nat upto_pow2(std::size_t i);

private:
    std::uint64_t state_;
};

}  // namespace dit
