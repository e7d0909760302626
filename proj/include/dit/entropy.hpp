#pragma once

#include <cstdint>
#include <string>

#include "dit/numeric.hpp"
#include "dit/prng.hpp"

namespace dit {

enum class LogicOp { and_, or_, xor_ };
LogicOp parse_logic_op(const std::string& name);
std::string to_string(LogicOp op);

/// single_bit: x op y on two bits. vector_chain: x_1 op ... op x_k to one
/// bit. bitwise_pair: two k-bit vectors. bitwise_set: n k-bit vectors.
enum class EntropyMode { single_bit, vector_chain, bitwise_pair, bitwise_set };
EntropyMode parse_entropy_mode(const std::string& name);
std::string to_string(EntropyMode mode);

struct EntropyRow {
    InfoValue h;      // output entropy under uniform input
    InfoValue delta;  // h minus input entropy
};

EntropyRow logic_entropy(LogicOp op, EntropyMode mode, unsigned k = 1, unsigned n = 2);

/// Plug-in entropy of op(x, y) over random bit pairs.
InfoValue mc_entropy_bit(LogicOp op, std::uint64_t trials, SplitMix64& rng);

/// Entropy of the k-bit output of a bitwise op on two random vectors,
/// estimated from the joint histogram with the Miller-Madow correction.
InfoValue mc_entropy_bitwise(LogicOp op, unsigned k, std::uint64_t trials, SplitMix64& rng);

}  // namespace dit
