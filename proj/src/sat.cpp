#include "dit/sat.hpp"

#include <sstream>
#include <unordered_map>

#include "dit/errors.hpp"

namespace dit {

int PropFormula::add(Node n)
{
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size() - 1);
}

int PropFormula::declare(const std::string& name)
{
    if (find_var(name) >= 0)
        throw rejected_input("variable declared twice: " + name);
    names_.push_back(name);
    return static_cast<int>(names_.size() - 1);
}

int PropFormula::find_var(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    return -1;
}

int PropFormula::var(int v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= names_.size())
        throw rejected_input("undeclared variable");
    return add({Op::var, {}, v});
}

int PropFormula::lnot(int a) { return add({Op::not_, {a}, -1}); }
int PropFormula::land(std::vector<int> kids) { return add({Op::and_, std::move(kids), -1}); }
int PropFormula::lor(std::vector<int> kids) { return add({Op::or_, std::move(kids), -1}); }
int PropFormula::lxor(int a, int b) { return add({Op::xor_, {a, b}, -1}); }
int PropFormula::iff(int a, int b) { return add({Op::iff, {a, b}, -1}); }

bool PropFormula::evaluate(const std::vector<bool>& assignment) const
{
    if (root_ < 0)
        throw rejected_input("formula has no root");
    return evaluate(root_, assignment);
}

bool PropFormula::evaluate(int id, const std::vector<bool>& a) const
{
    if (a.size() != names_.size())
        throw rejected_input("assignment size differs from variable count");
    const Node& n = node(id);
    switch (n.op) {
    case Op::var: return a[static_cast<std::size_t>(n.var)];
    case Op::not_: return !evaluate(n.kids[0], a);
    case Op::and_:
        for (int k : n.kids)
            if (!evaluate(k, a))
                return false;
        return true;
    case Op::or_:
        for (int k : n.kids)
            if (evaluate(k, a))
                return true;
        return false;
    case Op::xor_: return evaluate(n.kids[0], a) != evaluate(n.kids[1], a);
    case Op::iff: return evaluate(n.kids[0], a) == evaluate(n.kids[1], a);
    }
    return false;
}

std::string PropFormula::str(int id) const
{
    const Node& n = node(id);
    auto joined = [&](const char* sep, const char* empty) {
        if (n.kids.empty())
            return std::string(empty);
        std::string s = "(";
        for (std::size_t i = 0; i < n.kids.size(); ++i) {
            if (i)
                s += sep;
            s += str(n.kids[i]);
        }
        return s + ")";
    };
    switch (n.op) {
    case Op::var: return names_[static_cast<std::size_t>(n.var)];
    case Op::not_: return "~" + str(n.kids[0]);
    case Op::and_: return joined(" & ", "T");
    case Op::or_: return joined(" | ", "F");
    case Op::xor_: return joined(" ^ ", "F");
    case Op::iff: return joined(" <-> ", "T");
    }
    return "?";
}

PropFormula sat_encode(const SbxorInstance& inst, std::size_t bound)
{
    inst.validate();
    const std::size_t n = inst.n(), k = inst.k();
    if (n > bound || k > bound)
        throw budget_exceeded("sat encoding limited to n, k <= " + std::to_string(bound));
    PropFormula f;
    auto id = [](std::size_t v) { return std::to_string(v + 1); };
    std::vector<std::vector<int>> b(n, std::vector<int>(k)), y(n, std::vector<int>(k));
    std::vector<int> bc(k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            b[i][j] = f.declare("b_" + id(i) + "_" + id(j));
    for (std::size_t j = 0; j < k; ++j)
        bc[j] = f.declare("b_c_" + id(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            y[i][j] = f.declare("y_" + id(i) + "_" + id(j));

    auto lit = [&](int v, bool positive) { return positive ? f.var(v) : f.lnot(f.var(v)); };

    std::vector<int> p1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> key;
        for (std::size_t j = 0; j < k; ++j)
            key.push_back(lit(b[i][j], inst.rows[i].get(j)));
        p1.push_back(f.land(std::move(key)));
    }
    {
        std::vector<int> tgt;
        for (std::size_t j = 0; j < k; ++j)
            tgt.push_back(lit(bc[j], inst.target.get(j)));
        p1.push_back(f.land(std::move(tgt)));
    }
    const int p1_id = f.land(std::move(p1));

    std::vector<int> chains;
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<int> bits;
        for (std::size_t j = 0; j < k; ++j) {
            int acc = f.var(y[0][j]);
            for (std::size_t i = 1; i < m; ++i)
                acc = f.lxor(acc, f.var(y[i][j]));
            bits.push_back(f.iff(acc, f.var(bc[j])));
        }
        chains.push_back(f.land(std::move(bits)));
    }
    const int p2_id = f.lor(std::move(chains));

    std::vector<int> p3;
    for (std::size_t i = 0; i < n; ++i) {
        int acc = -1;
        for (std::size_t l = 0; l < n; ++l) {
            std::vector<int> eq;
            for (std::size_t j = 0; j < k; ++j)
                eq.push_back(f.iff(f.var(y[i][j]), f.var(b[l][j])));
            int e = f.land(std::move(eq));
            acc = acc < 0 ? e : f.lxor(acc, e);
        }
        p3.push_back(acc);
    }
    const int p3_id = f.land(std::move(p3));

    std::vector<int> p4;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t i2 = i + 1; i2 < n; ++i2) {
            std::vector<int> differ;
            for (std::size_t j = 0; j < k; ++j)
                differ.push_back(f.lnot(f.iff(f.var(y[i][j]), f.var(y[i2][j]))));
            p4.push_back(f.lor(std::move(differ)));
        }
    const int p4_id = f.land(std::move(p4));

    f.blocks = {{"p1", p1_id}, {"p2", p2_id}, {"p3", p3_id}, {"p4", p4_id}};
    f.set_root(f.land({p1_id, p2_id, p3_id, p4_id}));
    return f;
}

Cnf to_cnf(const PropFormula& f)
{
    Cnf cnf;
    cnf.num_vars = static_cast<int>(f.var_count());
    std::unordered_map<int, int> memo;
    auto fresh = [&] { return ++cnf.num_vars; };
    auto& cl = cnf.clauses;

    // Returns a DIMACS literal equivalent to node id.
    auto lit = [&](auto&& self, int id) -> int {
        if (auto it = memo.find(id); it != memo.end())
            return it->second;
        const auto& n = f.node(id);
        int out = 0;
        switch (n.op) {
        case PropFormula::Op::var: out = n.var + 1; break;
        case PropFormula::Op::not_: out = -self(self, n.kids[0]); break;
        case PropFormula::Op::and_:
        case PropFormula::Op::or_: {
            const bool is_and = n.op == PropFormula::Op::and_;
            std::vector<int> ks;
            for (int kid : n.kids)
                ks.push_back(self(self, kid));
            out = fresh();
            // and: v -> k_i, (all k_i) -> v. or is the dual.
            std::vector<int> big{is_and ? out : -out};
            for (int k : ks) {
                cl.push_back(is_and ? std::vector<int>{-out, k} : std::vector<int>{out, -k});
                big.push_back(is_and ? -k : k);
            }
            cl.push_back(std::move(big));
            break;
        }
        case PropFormula::Op::xor_:
        case PropFormula::Op::iff: {
            const int a = self(self, n.kids[0]);
            int b = self(self, n.kids[1]);
            if (n.op == PropFormula::Op::iff)
                b = -b;  // a <-> b  ==  a xor ~b
            out = fresh();
            cl.push_back({-out, a, b});
            cl.push_back({-out, -a, -b});
            cl.push_back({out, -a, b});
            cl.push_back({out, a, -b});
            break;
        }
        }
        memo[id] = out;
        return out;
    };
    if (f.root() < 0)
        throw rejected_input("formula has no root");
    cl.push_back({lit(lit, f.root())});
    return cnf;
}

std::string Cnf::dimacs() const
{
    std::ostringstream os;
    os << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
    for (const auto& c : clauses) {
        for (int l : c)
            os << l << ' ';
        os << "0\n";
    }
    return os.str();
}

}  // namespace dit
