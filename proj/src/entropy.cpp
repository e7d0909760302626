#include "dit/entropy.hpp"

#include <cmath>
#include <vector>

#include "dit/errors.hpp"

namespace dit {

LogicOp parse_logic_op(const std::string& name)
{
    if (name == "and") return LogicOp::and_;
    if (name == "or") return LogicOp::or_;
    if (name == "xor") return LogicOp::xor_;
    throw rejected_input("unknown logic op: " + name);
}

std::string to_string(LogicOp op)
{
    switch (op) {
    case LogicOp::and_: return "and";
    case LogicOp::or_: return "or";
    case LogicOp::xor_: return "xor";
    }
    return "?";
}

EntropyMode parse_entropy_mode(const std::string& name)
{
    if (name == "single-bit") return EntropyMode::single_bit;
    if (name == "vector-chain") return EntropyMode::vector_chain;
    if (name == "bitwise-pair") return EntropyMode::bitwise_pair;
    if (name == "bitwise-set") return EntropyMode::bitwise_set;
    throw rejected_input("unknown entropy mode: " + name);
}

std::string to_string(EntropyMode mode)
{
    switch (mode) {
    case EntropyMode::single_bit: return "single-bit";
    case EntropyMode::vector_chain: return "vector-chain";
    case EntropyMode::bitwise_pair: return "bitwise-pair";
    case EntropyMode::bitwise_set: return "bitwise-set";
    }
    return "?";
}

namespace {

// Entropy of one output bit when `inputs` uniform bits are combined.
// AND and OR are 1 on exactly one (resp. all but one) of 2^inputs cases.
InfoValue folded_bit_entropy(LogicOp op, unsigned inputs)
{
    if (op == LogicOp::xor_)
        return 1.0;
    return binary_entropy(std::ldexp(1.0, -static_cast<int>(inputs)));
}

bool apply(LogicOp op, bool a, bool b)
{
    switch (op) {
    case LogicOp::and_: return a && b;
    case LogicOp::or_: return a || b;
    case LogicOp::xor_: return a != b;
    }
    return false;
}

std::uint64_t apply_word(LogicOp op, std::uint64_t a, std::uint64_t b)
{
    switch (op) {
    case LogicOp::and_: return a & b;
    case LogicOp::or_: return a | b;
    case LogicOp::xor_: return a ^ b;
    }
    return 0;
}

}  // namespace

EntropyRow logic_entropy(LogicOp op, EntropyMode mode, unsigned k, unsigned n)
{
    if (k == 0)
        throw rejected_input("k must be at least 1");
    switch (mode) {
    case EntropyMode::single_bit: {
        InfoValue h = folded_bit_entropy(op, 2);
        return {h, h - 2.0};
    }
    case EntropyMode::vector_chain: {
        InfoValue h = folded_bit_entropy(op, k);
        return {h, h - k};
    }
    case EntropyMode::bitwise_pair: {
        InfoValue h = k * folded_bit_entropy(op, 2);
        return {h, h - 2.0 * k};
    }
    case EntropyMode::bitwise_set: {
        if (n == 0)
            throw rejected_input("n must be at least 1");
        InfoValue h = k * folded_bit_entropy(op, n);
        return {h, h - static_cast<double>(k) * n};
    }
    }
    throw rejected_input("unknown entropy mode");
}

InfoValue mc_entropy_bit(LogicOp op, std::uint64_t trials, SplitMix64& rng)
{
    if (trials == 0)
        throw rejected_input("trials must be positive");
    std::uint64_t ones = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t w = rng.next();
        ones += apply(op, w & 1U, (w >> 1) & 1U);
    }
    return binary_entropy(static_cast<double>(ones) / static_cast<double>(trials));
}

InfoValue mc_entropy_bitwise(LogicOp op, unsigned k, std::uint64_t trials, SplitMix64& rng)
{
    if (k == 0 || k > 24)
        throw rejected_input("k must be in [1, 24]");
    if (trials == 0)
        throw rejected_input("trials must be positive");
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> hist(std::size_t{1} << k, 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t a = rng.next() & mask;
        const std::uint64_t b = rng.next() & mask;
        ++hist[apply_word(op, a, b)];
    }
    const double N = static_cast<double>(trials);
    double h = 0.0;
    std::uint64_t occupied = 0;
    for (auto c : hist) {
        if (c == 0)
            continue;
        ++occupied;
        const double p = static_cast<double>(c) / N;
        h -= p * std::log2(p);
    }
    return h + static_cast<double>(occupied - 1) / (2.0 * N * std::log(2.0));
}

}  // namespace dit
