#include "dit/prng.hpp"

#include "dit/errors.hpp"

namespace dit {

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    if (bound == 0)
        throw rejected_input("empty sampling range");
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t v = next();
        if (v >= limit)
            return v % bound;
    }
}

Nat SplitMix64::upto_pow2(std::size_t i)
{
    const std::size_t nbits = i + 1;
    const std::size_t nwords = (nbits + 63) / 64;
    const Nat top = Nat(1) << i;
    for (;;) {
        Nat v = 0;
        for (std::size_t w = 0; w < nwords; ++w) {
            std::uint64_t word = next();
            std::size_t used = std::min<std::size_t>(64, nbits - 64 * w);
            if (used < 64)
                word &= (std::uint64_t{1} << used) - 1;
            v += Nat(static_cast<unsigned long>(word)) << (64 * w);
        }
        if (v <= top)
            return v;
    }
}

}  // namespace dit
