#pragma once

#include <optional>
#include <vector>

#include "dit/nat.hpp"

namespace dit {

using InfoValue = double;

Nat binom(const Nat& n, const Nat& k);
Nat isqrt(const Nat& n);

/// log2 n, with info(0) = info(1) = 0.
InfoValue info(const Nat& n);

/// Floor of log2 n (bit length minus one); Absent for 0.
std::optional<std::size_t> scale(const Nat& n);

class Dist {
public:
    explicit Dist(std::vector<double> probs);
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

InfoValue shannon_entropy(const Dist& d);

/// Entropy of a Bernoulli(p) variable.
InfoValue binary_entropy(double p);

Nat catalan(unsigned long n);
Nat stirling2(unsigned long n, unsigned long k);
Nat bell(unsigned long n);

enum class CountKind { catalan, stirling2, bell };
Nat combinatorial_counts(CountKind kind, unsigned long n, std::optional<unsigned long> k = {});

enum class ArithOp { add, mul, self_add, self_mul };
InfoValue delta_arith(ArithOp op, const Nat& x, const std::optional<Nat>& y = {});

}  // namespace dit
