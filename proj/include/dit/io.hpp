#pragma once

#include <string>

#include <json.hpp>

#include "dit/pairing.hpp"
#include "dit/sbxor.hpp"
#include "dit/setcodec.hpp"
#include "dit/sorted_injection.hpp"
#include "dit/subset_problems.hpp"

namespace dit {

/// Fixed six-digit decimal, locale independent.
std::string format_info(InfoValue v);

nlohmann::json to_json(const FinSet& s);
FinSet finset_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SubsetProblem& p);
SubsetProblem problem_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SbxorInstance& inst);
SbxorInstance sbxor_from_json(const nlohmann::json& j);

/// "x,y,delta" (+ ",residue" when present), y-major.
std::string surface_csv(const SurfaceSample& s);

/// header,count rows in ascending value order.
std::string table_csv(const std::map<Nat, std::uint64_t>& counts, const std::string& key_name);

/// Comma-separated decimal list, e.g. "1,4,6".
FinSet parse_finset(const std::string& text);

}  // namespace dit
