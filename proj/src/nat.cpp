#include "dit/nat.hpp"

#include <limits>

#include "dit/errors.hpp"

namespace dit {

Nat parse_nat(std::string_view text)
{
    if (text.empty())
        throw rejected_input("empty number");
    for (char c : text)
        if (c < '0' || c > '9')
            throw rejected_input("not a natural number: " + std::string(text));
    return Nat(std::string(text), 10);
}

std::string to_string(const Nat& n) { return n.get_str(10); }

bool fits_u64(const Nat& n)
{
    static_assert(sizeof(unsigned long) == 8);
    return sgn(n) >= 0 && n.fits_ulong_p();
}

std::uint64_t to_u64(const Nat& n)
{
    if (!fits_u64(n))
        throw rejected_input("value exceeds 64 bits: " + to_string(n));
    return n.get_ui();
}

std::size_t bit_length(const Nat& n)
{
    return sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

void require_nonnegative(const Nat& n, const char* what)
{
    if (sgn(n) < 0)
        throw rejected_input(std::string(what) + " must be non-negative");
}

}  // namespace dit
