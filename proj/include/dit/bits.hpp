#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dit {

/// Fixed-length bit string packed into 64-bit words. Text form writes
/// index 0 first: "100" has bit 0 set.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    static BitVector parse(std::string_view text);
    static BitVector from_word(std::uint64_t w, std::size_t len);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool v = true);
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    std::size_t popcount() const;
    bool none() const;
    std::uint64_t word(std::size_t w) const { return words_[w]; }
    std::size_t word_count() const { return words_.size(); }
    std::vector<std::size_t> ones() const;

    std::string str() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend auto operator<=>(const BitVector&, const BitVector&) = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

std::size_t hamming(const BitVector& a, const BitVector& b);

/// Characteristic string of a subset: bit i set iff element i is present.
using CharString = BitVector;

}  // namespace dit
