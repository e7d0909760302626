#include "dit/io.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "dit/errors.hpp"

namespace dit {

std::string format_info(InfoValue v)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    // Avoid printing "-0.000000".
    if (std::abs(v) < 5e-7)
        v = 0.0;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

nlohmann::json to_json(const FinSet& s)
{
    nlohmann::json a = nlohmann::json::array();
    for (const Nat& e : s.elems())
        a.push_back(to_string(e));
    return a;
}

namespace {

Nat nat_from_json(const nlohmann::json& j)
{
    if (j.is_string())
        return parse_nat(j.get<std::string>());
    if (j.is_number_unsigned())
        return from_u64(j.get<std::uint64_t>());
    throw rejected_input("expected a natural number as a decimal string");
}

}  // namespace

FinSet finset_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw rejected_input("set must be a JSON array");
    std::vector<Nat> v;
    for (const auto& e : j)
        v.push_back(nat_from_json(e));
    return FinSet(std::move(v));
}

nlohmann::json to_json(const SubsetProblem& p)
{
    nlohmann::json cb = nlohmann::json::array();
    for (const Nat& e : p.codebook.entries)
        cb.push_back(to_string(e));
    return {{"codebook", cb}, {"target", to_string(p.target)}, {"op", to_string(p.op)}};
}

SubsetProblem problem_from_json(const nlohmann::json& j)
{
    SubsetProblem p;
    std::vector<Nat> entries;
    for (const auto& e : j.at("codebook"))
        entries.push_back(nat_from_json(e));
    p.codebook = Codebook(std::move(entries));
    p.target = j.contains("target") ? nat_from_json(j.at("target")) : Nat(0);
    p.op = parse_subset_op(j.value("op", std::string("sum")));
    return p;
}

nlohmann::json to_json(const SbxorInstance& inst)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : inst.rows)
        rows.push_back(r.str());
    nlohmann::json j = {{"rows", rows}, {"target", inst.target.str()}};
    if (inst.hidden_selection)
        j["selection"] = inst.hidden_selection->str();
    return j;
}

SbxorInstance sbxor_from_json(const nlohmann::json& j)
{
    std::vector<BitVector> rows;
    for (const auto& r : j.at("rows"))
        rows.push_back(BitVector::parse(r.get<std::string>()));
    BitVector target = BitVector::parse(j.at("target").get<std::string>());
    std::optional<BitVector> sel;
    if (j.contains("selection"))
        sel = BitVector::parse(j.at("selection").get<std::string>());
    return SbxorInstance(std::move(rows), std::move(target), std::move(sel));
}

std::string surface_csv(const SurfaceSample& s)
{
    const bool residue = !s.grid.empty() && s.grid.front().residue.has_value();
    std::string out = residue ? "x,y,delta,residue\n" : "x,y,delta\n";
    for (const auto& c : s.grid) {
        out += std::to_string(c.x) + ',' + std::to_string(c.y) + ',' + format_info(c.delta);
        if (residue)
            out += ',' + std::to_string(*c.residue);
        out += '\n';
    }
    return out;
}

std::string table_csv(const std::map<Nat, std::uint64_t>& counts, const std::string& key_name)
{
    std::string out = key_name + ",count\n";
    for (const auto& [v, c] : counts)
        out += to_string(v) + ',' + std::to_string(c) + '\n';
    return out;
}

FinSet parse_finset(const std::string& text)
{
    std::vector<Nat> v;
    if (text.empty())
        return FinSet();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        v.push_back(parse_nat(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return FinSet::of(std::move(v));
}

}  // namespace dit
