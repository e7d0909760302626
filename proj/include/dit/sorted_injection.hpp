#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dit/nat.hpp"
#include "dit/setcodec.hpp"

namespace dit {

enum class ZetaKind { cardinality, sum, product, binary, parity };

ZetaKind parse_zeta_kind(const std::string& name);
std::string to_string(ZetaKind kind);

/// Value -> multiplicity, sorted by value.
struct CensusTable {
    std::map<Nat, std::uint64_t> counts;
    std::string universe;

    std::uint64_t total() const;
    std::vector<Nat> expand() const;  // sorted multiset
};

Nat zeta_eval(ZetaKind kind, const FinSet& s);

/// First coordinate of phi_zeta: zeta(s), except |s|-1 for cardinality.
Nat zeta_column(ZetaKind kind, const FinSet& s);

inline constexpr std::uint64_t default_theta_budget = 50'000'000;

/// Number of sets s' with phi_car_index(s') < phi_car_index(s) and the same
/// zeta value. Linear scan over phi_car order.
Nat theta_index(ZetaKind kind, const FinSet& s, std::uint64_t budget = default_theta_budget);

/// Incremental theta_index: remembers the scanned prefix of phi_car order.
/// Safe to share between threads.
class ThetaIndexer {
public:
    explicit ThetaIndexer(ZetaKind kind, std::uint64_t budget = default_theta_budget)
        : kind_(kind), budget_(budget) {}

    Nat theta(const FinSet& s);
    std::uint64_t scanned() const;

private:
    void extend_to(std::uint64_t end);

    ZetaKind kind_;
    std::uint64_t budget_;
    mutable std::mutex mu_;
    std::uint64_t scanned_ = 0;
    std::map<Nat, std::vector<std::uint64_t>> seen_;  // zeta value -> phi_car indices, ascending
};

/// pair(zeta_column(s), theta(s)).
Nat phi_zeta(ZetaKind kind, const FinSet& s, std::uint64_t budget = default_theta_budget);
Nat phi_zeta(ThetaIndexer& idx, ZetaKind kind, const FinSet& s);

inline constexpr std::size_t default_powerset_bound = 24;

/// zeta over every non-empty subset of base.
CensusTable powerset_dilation(const FinSet& base, ZetaKind kind,
                              std::size_t bound = default_powerset_bound);

struct DensityCensus {
    Nat c;                         // distinct values in [1, n]
    double d = 0.0;                // c / n
    std::optional<double> decay;   // n / c
};

DensityCensus density_census(const std::vector<Nat>& values, const Nat& n);
DensityCensus density_census(const CensusTable& values, const Nat& n);

}  // namespace dit
