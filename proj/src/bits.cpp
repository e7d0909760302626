#include "dit/bits.hpp"

#include <bit>

#include "dit/errors.hpp"

namespace dit {

BitVector::BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

BitVector BitVector::parse(std::string_view text)
{
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            v.set(i);
        else if (text[i] != '0')
            throw rejected_input("bit string may contain only 0 and 1");
    }
    return v;
}

BitVector BitVector::from_word(std::uint64_t w, std::size_t len)
{
    if (len > 64)
        throw rejected_input("word form holds at most 64 bits");
    BitVector v(len);
    if (len > 0)
        v.words_[0] = len == 64 ? w : (w & ((std::uint64_t{1} << len) - 1));
    return v;
}

void BitVector::set(std::size_t i, bool v)
{
    const std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (v)
        words_[i / 64] |= m;
    else
        words_[i / 64] &= ~m;
}

BitVector& BitVector::operator^=(const BitVector& o)
{
    if (o.len_ != len_)
        throw rejected_input("bit vector length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= o.words_[w];
    return *this;
}

std::size_t BitVector::popcount() const
{
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVector::none() const
{
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

std::vector<std::size_t> BitVector::ones() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i))
            out.push_back(i);
    return out;
}

std::string BitVector::str() const
{
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

std::size_t hamming(const BitVector& a, const BitVector& b) { return (a ^ b).popcount(); }

}  // namespace dit
