#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dit/bits.hpp"
#include "dit/nat.hpp"

namespace dit {

struct Codebook {
    std::vector<Nat> entries;  // index = scale position

    Codebook() = default;
    explicit Codebook(std::vector<Nat> e);
    static Codebook of(std::initializer_list<unsigned long> e);

    std::size_t template_len() const { return entries.size(); }
};

enum class SubsetOp { sum, product, parity };
SubsetOp parse_subset_op(const std::string& name);
std::string to_string(SubsetOp op);

struct SubsetProblem {
    Codebook codebook;
    Nat target;
    SubsetOp op = SubsetOp::sum;
};

struct SolutionCensus {
    std::map<Nat, std::uint64_t> counts;
    std::uint64_t subset_total = 0;

    std::uint64_t count(const Nat& target) const;
};

/// Entry i uniform in [0, 2^i], redrawn while it duplicates an earlier entry.
Codebook gen_scale_free(std::size_t k, std::uint64_t seed);

/// [2^0, 2^1, ..., 2^(k-1)].
Codebook canonical_template(std::size_t k);

struct Selection {
    std::vector<Nat> entries;  // codebook order
    Nat sum;
};
Selection select_by_charstring(const Codebook& cb, const CharString& cs);

/// Value of the op over the selected entries. Product of nothing is
/// rejected; sum and parity of nothing are 0.
Nat subset_value(const Codebook& cb, const CharString& cs, SubsetOp op);
bool check(const SubsetProblem& p, const CharString& cs);

inline constexpr std::size_t default_exhaustive_bound = 32;
inline constexpr std::size_t mitm_bound = 48;
inline constexpr std::size_t product_divisor_bound = 64;

/// Witness selection or Absent. Sum uses meet-in-the-middle when the
/// codebook fits 64-bit arithmetic; product searches only entries dividing
/// the target, and the bound applies to that reduced codebook.
std::optional<CharString> solve(const SubsetProblem& p,
                                std::size_t bound = default_exhaustive_bound);

std::optional<CharString> solve_sum_exhaustive(const Codebook& cb, const Nat& target,
                                               std::size_t bound = default_exhaustive_bound);
std::optional<CharString> solve_sum_mitm(const Codebook& cb, const Nat& target);

inline constexpr std::size_t census_bound = 26;

/// Full target -> count map. Product census skips the empty subset.
SolutionCensus census(const Codebook& cb, SubsetOp op);

/// Gaps between consecutive reachable targets inside [lo, hi].
std::vector<Nat> interval_lengths(const SolutionCensus& c, const Nat& lo, const Nat& hi);

/// Reachable targets in [1, n], divided by n.
double fractal_density(const SolutionCensus& c, const Nat& n);

/// Mean count over reachable targets.
double mean_solutions(const SolutionCensus& c);

/// Floor-log2 scale of every entry; Absent for 0.
std::vector<std::optional<std::size_t>> codebook_scales(const Codebook& cb);

}  // namespace dit
