#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dit/bits.hpp"

namespace dit {

/// n distinct rows of k bits, a k-bit target, and optionally the selection
/// the generator used.
struct SbxorInstance {
    std::vector<BitVector> rows;
    BitVector target;
    std::optional<BitVector> hidden_selection;

    SbxorInstance() = default;
    SbxorInstance(std::vector<BitVector> rows, BitVector target,
                  std::optional<BitVector> hidden = std::nullopt);

    std::size_t n() const { return rows.size(); }
    std::size_t k() const { return target.size(); }

    /// Throws rejected_input on ragged or duplicate rows.
    void validate() const;
};

BitVector xor_fold(const std::vector<BitVector>& rows);

/// Fold of the rows picked by sel. sel must be non-empty.
BitVector xor_selected(const std::vector<BitVector>& rows, const BitVector& sel);

/// Square instance read from one bit stream: n rows of n bits, then n
/// selection bits. Redraws the whole block while rows collide or the
/// selection is empty.
SbxorInstance gen_canonical(std::size_t n, std::uint64_t seed);

/// n distinct random rows of k bits with a random non-empty selection.
SbxorInstance gen_random(std::size_t n, std::size_t k, std::uint64_t seed);

/// The empty selection never satisfies an instance.
bool check(const SbxorInstance& inst, const BitVector& sel);

inline constexpr std::size_t xor_bruteforce_bound = 26;

std::optional<BitVector> solve_bruteforce(const SbxorInstance& inst);
std::optional<BitVector> solve_bruteforce_serial(const SbxorInstance& inst);

/// Gaussian elimination over GF(2). A zero target needs a non-trivial
/// kernel vector.
std::optional<BitVector> solve_gf2(const SbxorInstance& inst);

BitVector mmk_encrypt(const std::vector<BitVector>& keys, const BitVector& message);
BitVector mmk_decrypt(const std::vector<BitVector>& keys, const BitVector& cipher);

/// Re-targets inst to message by flipping, per differing column, one bit in
/// a pseudo-randomly chosen selected row. If the flip would make two rows
/// equal, the next selected row (cyclically) is tried.
SbxorInstance absorb(const SbxorInstance& inst, const BitVector& message, std::uint64_t seed);

}  // namespace dit
