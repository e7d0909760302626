#pragma once

#include <initializer_list>
#include <vector>

#include "dit/bits.hpp"
#include "dit/nat.hpp"
#include "dit/numeric.hpp"
#include "dit/pairing.hpp"
#include "dit/prng.hpp"

namespace dit {

/// Finite set of naturals, held in strictly ascending order.
class FinSet {
public:
    FinSet() = default;
    /// Elements must already be strictly ascending.
    explicit FinSet(std::vector<Nat> ascending);
    /// Sorts; rejects duplicates.
    static FinSet of(std::vector<Nat> elems);
    static FinSet of(std::initializer_list<unsigned long> elems);

    const std::vector<Nat>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const Nat& max() const { return elems_.back(); }

    friend bool operator==(const FinSet&, const FinSet&) = default;

private:
    std::vector<Nat> elems_;
};

std::string to_string(const FinSet& s);  // "{1,4,6}"

Nat combinadic_rank(const FinSet& s);
FinSet combinadic_unrank(std::size_t k, const Nat& idx);

Point phi_car(const FinSet& s);
Nat phi_car_index(const FinSet& s);
FinSet phi_car_inv(const Nat& n);

Nat upsilon(const FinSet& s);
FinSet upsilon_inv(const Nat& n);

/// Upsilon after phi_car^-1 after unpair; total on N.
Nat endo(const Nat& n);

InfoValue cond_subset_info(const Nat& n, const Nat& k);

/// info(phi_car_index(s)) - info(upsilon(s)).
InfoValue car_bin_divergence(const FinSet& s);

/// A k-element set with maximum 2k: 2k is included, then ascending passes
/// over 0..2k-1 take each missing number with probability 1/2 until the
/// set has k elements.
FinSet string_typical_set(std::size_t k, SplitMix64& rng);

/// Set of bit positions of a characteristic string, and back.
FinSet charstring_to_set(const CharString& cs);
CharString set_to_charstring(const FinSet& s, std::size_t len);

}  // namespace dit
