#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dit {

/// Arbitrary-precision natural number. Non-negativity is checked where
/// values enter the library (parse_nat and the FinSet/Point constructors).
using Nat = mpz_class;

Nat parse_nat(std::string_view text);
std::string to_string(const Nat& n);

bool fits_u64(const Nat& n);
std::uint64_t to_u64(const Nat& n);  // throws rejected_input if it does not fit
inline Nat from_u64(std::uint64_t v) { return Nat(static_cast<unsigned long>(v)); }

/// Number of binary digits; 0 for n = 0.
std::size_t bit_length(const Nat& n);

void require_nonnegative(const Nat& n, const char* what);

}  // namespace dit
