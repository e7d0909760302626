#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dit/sbxor.hpp"

namespace dit {

/// Propositional formula stored as a node arena. Node ids are indices.
class PropFormula {
public:
    enum class Op { var, not_, and_, or_, xor_, iff };

    struct Node {
        Op op;
        std::vector<int> kids;
        int var = -1;
    };

    int declare(const std::string& name);
    int var(int v);
    int lnot(int a);
    int land(std::vector<int> kids);  // empty conjunction is true
    int lor(std::vector<int> kids);   // empty disjunction is false
    int lxor(int a, int b);
    int iff(int a, int b);

    void set_root(int r) { root_ = r; }
    int root() const { return root_; }

    const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t var_count() const { return names_.size(); }
    const std::string& var_name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
    int find_var(const std::string& name) const;  // -1 if undeclared

    bool evaluate(const std::vector<bool>& assignment) const;
    bool evaluate(int id, const std::vector<bool>& assignment) const;

    /// Infix text, e.g. "((b_1_1 & ~b_1_2) | y_1_1)".
    std::string str(int id) const;

    /// Named top-level blocks (for sat_encode: p1..p4).
    std::vector<std::pair<std::string, int>> blocks;

private:
    int add(Node n);

    std::vector<Node> nodes_;
    std::vector<std::string> names_;
    int root_ = -1;
};

inline constexpr std::size_t sat_encode_bound = 8;

/// Conjunction of four blocks: p1 fixes the key and target bits, p2 says
/// some prefix chain y_1 ^ ... ^ y_m equals the target, p3 assigns every
/// chain slot y_i to exactly one key, p4 keeps the slots pairwise distinct.
/// Variables: b_i_j (key i bit j), b_c_j (target), y_i_j (slot i bit j).
PropFormula sat_encode(const SbxorInstance& inst, std::size_t bound = sat_encode_bound);

struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    std::string dimacs() const;
};

/// Tseitin transformation. Formula variable v becomes DIMACS variable v+1;
/// auxiliaries follow.
Cnf to_cnf(const PropFormula& f);

}  // namespace dit
