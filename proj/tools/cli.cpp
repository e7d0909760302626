#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "dit/dilation.hpp"
#include "dit/entropy.hpp"
#include "dit/errors.hpp"
#include "dit/fixtures.hpp"
#include "dit/io.hpp"
#include "dit/kernels.hpp"
#include "dit/numeric.hpp"
#include "dit/pairing.hpp"
#include "dit/sat.hpp"
#include "dit/sbxor.hpp"
#include "dit/setcodec.hpp"
#include "dit/sorted_injection.hpp"
#include "dit/subset_problems.hpp"

namespace dit::cli {

namespace {

struct Range {
    Nat lo, hi;
};

Range parse_range(const std::string& s)
{
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw rejected_input("range must look like lo:hi");
    Range r{parse_nat(s.substr(0, colon)), parse_nat(s.substr(colon + 1))};
    if (r.lo > r.hi)
        throw rejected_input("range is empty: lo > hi");
    return r;
}

std::string set_text(const FinSet& s) { return to_string(s); }

DilationSpec make_spec(const std::string& rate, const std::string& c, unsigned long k)
{
    const Nat cn = parse_nat(c);
    if (rate == "constant")
        return DilationSpec::constant(cn);
    if (rate == "linear")
        return DilationSpec::linear(cn);
    if (rate == "polynomial")
        return DilationSpec::polynomial(cn, k);
    throw rejected_input("unknown rate: " + rate);
}

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw rejected_input("cannot read " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw rejected_input(path + ": " + e.what());
    }
}

SbxorInstance load_instance(const std::string& path, const std::string& fixture)
{
    if (!fixture.empty()) {
        if (fixture != "paper-xorsat" && fixture != "xorsat3")
            throw rejected_input("unknown fixture: " + fixture);
        return fixtures::xorsat_example();
    }
    if (path.empty())
        throw rejected_input("give --instance FILE or --fixture xorsat3");
    try {
        return sbxor_from_json(read_json_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw rejected_input(path + ": " + e.what());
    }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pairing functions, set codecs, dilations, subset problems and XOR instances"};
    app.name("dit");
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o,--output", output, "Write the result to this file instead of stdout");

    std::ostringstream os;
    std::function<void()> action;

    // pair / unpair
    auto* c_pair = app.add_subcommand("pair", "Cantor index of (x, y)");
    std::string px, py;
    c_pair->add_option("x", px)->required();
    c_pair->add_option("y", py)->required();
    c_pair->callback([&] { action = [&] { os << to_string(pair(parse_nat(px), parse_nat(py))) << '\n'; }; });

    auto* c_unpair = app.add_subcommand("unpair", "Point (x, y) of a Cantor index");
    std::string pz;
    c_unpair->add_option("z", pz)->required();
    c_unpair->callback([&] {
        action = [&] {
            Point p = unpair(parse_nat(pz));
            os << to_string(p.x) << ' ' << to_string(p.y) << '\n';
        };
    });

    // setindex
    auto* c_setindex = app.add_subcommand("setindex", "phi_car index and binary number of a set, or the set of an index");
    std::string si_set, si_index;
    c_setindex->add_option("--set", si_set, "Comma-separated elements");
    c_setindex->add_option("--index", si_index, "phi_car index to decode");
    c_setindex->callback([&] {
        action = [&] {
            if (si_set.empty() == si_index.empty())
                throw rejected_input("give exactly one of --set and --index");
            if (!si_index.empty()) {
                os << set_text(phi_car_inv(parse_nat(si_index))) << '\n';
                return;
            }
            FinSet s = parse_finset(si_set);
            Point p = phi_car(s);
            os << "cardinality " << s.size() << '\n'
               << "rank " << to_string(p.y) << '\n'
               << "point " << to_string(p.x) << ' ' << to_string(p.y) << '\n'
               << "phi_car_index " << to_string(pair(p)) << '\n'
               << "upsilon " << to_string(upsilon(s)) << '\n'
               << "divergence " << format_info(car_bin_divergence(s)) << '\n';
        };
    });

    // upsilon
    auto* c_ups = app.add_subcommand("upsilon", "Binary-number bijection between sets and naturals");
    std::string up_set, up_value;
    bool up_empty = false;
    c_ups->add_option("--set", up_set, "Comma-separated elements");
    c_ups->add_flag("--empty", up_empty, "Use the empty set");
    c_ups->add_option("--value", up_value, "Natural number to decode");
    c_ups->callback([&] {
        action = [&] {
            if (!up_value.empty())
                os << set_text(upsilon_inv(parse_nat(up_value))) << '\n';
            else if (up_empty || !up_set.empty())
                os << to_string(upsilon(up_empty ? FinSet() : parse_finset(up_set))) << '\n';
            else
                throw rejected_input("give --set, --empty or --value");
        };
    });

    // endo
    auto* c_endo = app.add_subcommand("endo", "upsilon(phi_car_inv(n))");
    std::string en;
    std::uint64_t en_count = 1;
    c_endo->add_option("n", en)->required();
    c_endo->add_option("--count", en_count, "Print n, n+1, ... for this many values");
    c_endo->callback([&] {
        action = [&] {
            Nat n = parse_nat(en);
            for (std::uint64_t i = 0; i < en_count; ++i, ++n)
                os << to_string(n) << ',' << to_string(endo(n)) << '\n';
        };
    });

    // dilate
    auto* c_dil = app.add_subcommand("dilate", "Elastic dilation of a point");
    std::string d_rate = "constant", d_c = "2", dx, dy;
    unsigned long d_k = 1;
    bool d_inverse = false, d_endo = false;
    c_dil->add_option("--rate", d_rate, "constant | linear | polynomial")->capture_default_str();
    c_dil->add_option("--c", d_c, "Rate constant")->capture_default_str();
    c_dil->add_option("--k", d_k, "Exponent for polynomial rates")->capture_default_str();
    c_dil->add_flag("--inverse", d_inverse, "Undilate instead");
    c_dil->add_flag("--induced", d_endo, "Treat x as a Cantor index and print the induced endomorphism");
    c_dil->add_option("x", dx)->required();
    c_dil->add_option("y", dy);
    c_dil->callback([&] {
        action = [&] {
            auto spec = make_spec(d_rate, d_c, d_k);
            if (d_endo) {
                os << to_string(induced_endo(spec, parse_nat(dx))) << '\n';
                return;
            }
            if (dy.empty())
                throw rejected_input("dilate needs x and y");
            Point p(parse_nat(dx), parse_nat(dy));
            if (d_inverse) {
                auto q = undilate(spec, p);
                if (q)
                    os << to_string(q->x) << ' ' << to_string(q->y) << '\n';
                else
                    os << "absent\n";
                return;
            }
            Point q = dilate(spec, p);
            os << to_string(q.x) << ' ' << to_string(q.y) << '\n';
            if (sgn(p.x) > 0 && sgn(p.y) > 0)
                os << "delta " << format_info(dilation_efficiency(spec, p)) << '\n';
        };
    });

    // surface
    auto* c_surf = app.add_subcommand("surface", "Efficiency surface as CSV x,y,delta");
    std::uint64_t s_xmax = 10, s_ymax = 10, s_step = 1;
    std::string s_rate, s_c = "2";
    unsigned long s_k = 1;
    c_surf->add_option("--x-max", s_xmax)->capture_default_str();
    c_surf->add_option("--y-max", s_ymax)->capture_default_str();
    c_surf->add_option("--step", s_step)->capture_default_str();
    c_surf->add_option("--rate", s_rate, "Dilate first: constant | linear | polynomial");
    c_surf->add_option("--c", s_c, "Rate constant")->capture_default_str();
    c_surf->add_option("--k", s_k, "Exponent for polynomial rates")->capture_default_str();
    c_surf->callback([&] {
        action = [&] {
            if (s_rate.empty())
                os << surface_csv(efficiency_surface(s_xmax, s_ymax, s_step));
            else
                os << surface_csv(dilation_surface(make_spec(s_rate, s_c, s_k), s_xmax, s_ymax, s_step));
        };
    });

    // zeta
    auto* c_zeta = app.add_subcommand("zeta", "Sorted injection of a set");
    std::string z_kind = "sum", z_set;
    std::uint64_t z_budget = default_theta_budget;
    c_zeta->add_option("--kind", z_kind, "cardinality | sum | product | binary | parity")->capture_default_str();
    c_zeta->add_option("--set", z_set)->required();
    c_zeta->add_option("--budget", z_budget, "Largest phi_car index to scan")->capture_default_str();
    c_zeta->callback([&] {
        action = [&] {
            auto kind = parse_zeta_kind(z_kind);
            FinSet s = parse_finset(z_set);
            Nat theta = theta_index(kind, s, z_budget);
            os << "zeta " << to_string(zeta_eval(kind, s)) << '\n'
               << "theta " << to_string(theta) << '\n'
               << "phi_zeta " << to_string(pair(zeta_column(kind, s), theta)) << '\n';
        };
    });

    // powerset
    auto* c_pow = app.add_subcommand("powerset", "zeta over all non-empty subsets of a base set");
    std::string pw_set, pw_kind = "sum", pw_format = "list";
    std::size_t pw_bound = default_powerset_bound;
    c_pow->add_option("--set", pw_set)->required();
    c_pow->add_option("--kind", pw_kind)->capture_default_str();
    c_pow->add_option("--format", pw_format, "list | csv")->capture_default_str();
    c_pow->add_option("--bound", pw_bound)->capture_default_str();
    c_pow->callback([&] {
        action = [&] {
            auto t = powerset_dilation(parse_finset(pw_set), parse_zeta_kind(pw_kind), pw_bound);
            if (pw_format == "csv") {
                os << table_csv(t.counts, "value");
            } else if (pw_format == "list") {
                auto v = t.expand();
                os << '{';
                for (std::size_t i = 0; i < v.size(); ++i)
                    os << (i ? "," : "") << to_string(v[i]);
                os << "}\n";
            } else {
                throw rejected_input("unknown format: " + pw_format);
            }
        };
    });

    // scalefree
    auto* c_sf = app.add_subcommand("scalefree", "Generate a scale-free codebook");
    std::size_t sf_k = 22;
    std::uint64_t sf_seed = 0;
    std::string sf_cs, sf_fixture;
    c_sf->add_option("--k", sf_k)->capture_default_str();
    c_sf->add_option("--seed", sf_seed)->capture_default_str();
    c_sf->add_option("--fixture", sf_fixture, "ssex2 (alias paper-ssex2) | canonical");
    c_sf->add_option("--charstring", sf_cs, "Select entries and report their sum");
    c_sf->callback([&] {
        action = [&] {
            Codebook cb = (sf_fixture == "paper-ssex2" || sf_fixture == "ssex2") ? fixtures::ssex2_codebook()
                          : sf_fixture == "canonical" ? canonical_template(sf_k)
                          : sf_fixture.empty()        ? gen_scale_free(sf_k, sf_seed)
                                                      : throw rejected_input("unknown fixture: " + sf_fixture);
            nlohmann::json j = to_json(SubsetProblem{cb, 0, SubsetOp::sum});
            j.erase("target");
            j.erase("op");
            nlohmann::json scales = nlohmann::json::array();
            for (auto s : codebook_scales(cb))
                scales.push_back(s ? nlohmann::json(*s) : nlohmann::json());
            j["scales"] = scales;
            if (!sf_cs.empty()) {
                auto sel = select_by_charstring(cb, CharString::parse(sf_cs));
                nlohmann::json entries = nlohmann::json::array();
                for (const auto& e : sel.entries)
                    entries.push_back(to_string(e));
                j["selection"] = {{"charstring", sf_cs}, {"entries", entries}, {"sum", to_string(sel.sum)}};
            }
            os << dump(j);
        };
    });

    // census
    auto* c_cen = app.add_subcommand("census", "Solution census (target,count) or a single solve");
    std::size_t ce_k = 16;
    std::uint64_t ce_seed = 0;
    std::string ce_op = "sum", ce_target, ce_range, ce_fixture, ce_file;
    bool ce_summary = false;
    c_cen->add_option("--k", ce_k)->capture_default_str();
    c_cen->add_option("--seed", ce_seed)->capture_default_str();
    c_cen->add_option("--op", ce_op, "sum | product | parity")->capture_default_str();
    c_cen->add_option("--target", ce_target, "Solve for this target instead of printing the census");
    c_cen->add_option("--range", ce_range, "Only print targets in lo:hi");
    c_cen->add_option("--fixture", ce_fixture, "ssex2 (alias paper-ssex2) | canonical");
    c_cen->add_option("--problem", ce_file, "JSON problem file");
    c_cen->add_flag("--summary", ce_summary, "Print statistics instead of the table");
    c_cen->callback([&] {
        action = [&] {
            SubsetProblem p;
            if (!ce_file.empty()) {
                try {
                    p = problem_from_json(read_json_file(ce_file));
                } catch (const nlohmann::json::exception& e) {
                    throw rejected_input(ce_file + ": " + e.what());
                }
            } else {
                p.codebook = (ce_fixture == "paper-ssex2" || ce_fixture == "ssex2") ? fixtures::ssex2_codebook()
                             : ce_fixture == "canonical" ? canonical_template(ce_k)
                             : ce_fixture.empty()        ? gen_scale_free(ce_k, ce_seed)
                                                         : throw rejected_input("unknown fixture: " + ce_fixture);
                p.op = parse_subset_op(ce_op);
            }
            if (!ce_target.empty())
                p.target = parse_nat(ce_target);
            if (!ce_target.empty() || !ce_file.empty()) {
                auto w = solve(p);
                nlohmann::json j = to_json(p);
                j["witness"] = w ? nlohmann::json(w->str()) : nlohmann::json();
                os << dump(j);
                return;
            }
            SolutionCensus c = census(p.codebook, p.op);
            if (ce_summary) {
                os << "subsets " << c.subset_total << '\n'
                   << "reachable " << c.counts.size() << '\n'
                   << "mean_solutions " << format_info(mean_solutions(c)) << '\n';
                if (!ce_range.empty()) {
                    Range r = parse_range(ce_range);
                    auto gaps = interval_lengths(c, r.lo, r.hi);
                    Nat longest = 0;
                    for (const auto& g : gaps)
                        if (g > longest)
                            longest = g;
                    os << "gaps " << gaps.size() << '\n' << "longest_gap " << to_string(longest) << '\n';
                    if (r.hi >= 1)
                        os << "density " << format_info(fractal_density(c, r.hi)) << '\n';
                }
                return;
            }
            if (ce_range.empty()) {
                os << table_csv(c.counts, "target");
            } else {
                Range r = parse_range(ce_range);
                std::map<Nat, std::uint64_t> part(c.counts.lower_bound(r.lo), c.counts.upper_bound(r.hi));
                os << table_csv(part, "target");
            }
        };
    });

    // sbxor
    auto* c_x = app.add_subcommand("sbxor", "Subset bitwise XOR instances");
    c_x->require_subcommand(1);
    std::size_t x_n = 8, x_k = 0;
    std::uint64_t x_seed = 0;
    std::string x_inst, x_fix, x_sel, x_method = "gf2", x_format = "dimacs", x_msg;
    auto* x_gen = c_x->add_subcommand("gen", "Generate an instance (JSON)");
    x_gen->add_option("--n", x_n)->capture_default_str();
    x_gen->add_option("--k", x_k, "Row length; 0 means the square layout read from one bit stream")->capture_default_str();
    x_gen->add_option("--seed", x_seed)->capture_default_str();
    x_gen->callback([&] {
        action = [&] { os << dump(to_json(x_k == 0 ? gen_canonical(x_n, x_seed) : gen_random(x_n, x_k, x_seed))); };
    });
    auto add_source = [&](CLI::App* s) {
        s->add_option("--instance", x_inst, "Instance JSON file");
        s->add_option("--fixture", x_fix, "xorsat3 (alias paper-xorsat)");
    };
    auto* x_check = c_x->add_subcommand("check", "Check a selection");
    add_source(x_check);
    x_check->add_option("--selection", x_sel)->required();
    x_check->callback([&] {
        action = [&] { os << (check(load_instance(x_inst, x_fix), BitVector::parse(x_sel)) ? "true" : "false") << '\n'; };
    });
    auto* x_solve = c_x->add_subcommand("solve", "Find a selection");
    add_source(x_solve);
    x_solve->add_option("--method", x_method, "gf2 | brute")->capture_default_str();
    x_solve->callback([&] {
        action = [&] {
            auto inst = load_instance(x_inst, x_fix);
            std::optional<BitVector> w;
            if (x_method == "gf2")
                w = solve_gf2(inst);
            else if (x_method == "brute")
                w = solve_bruteforce(inst);
            else
                throw rejected_input("unknown method: " + x_method);
            os << (w ? w->str() : std::string("absent")) << '\n';
        };
    });
    auto* x_sat = c_x->add_subcommand("sat", "SAT encoding (DIMACS or formula text)");
    add_source(x_sat);
    x_sat->add_option("--format", x_format, "dimacs | formula")->capture_default_str();
    x_sat->callback([&] {
        action = [&] {
            auto f = sat_encode(load_instance(x_inst, x_fix));
            if (x_format == "dimacs") {
                os << to_cnf(f).dimacs();
            } else if (x_format == "formula") {
                for (const auto& [name, id] : f.blocks)
                    os << name << " = " << f.str(id) << '\n';
            } else {
                throw rejected_input("unknown format: " + x_format);
            }
        };
    });
    auto* x_abs = c_x->add_subcommand("absorb", "Re-target an instance to carry a message");
    add_source(x_abs);
    x_abs->add_option("--message", x_msg)->required();
    x_abs->add_option("--seed", x_seed)->capture_default_str();
    x_abs->callback([&] {
        action = [&] { os << dump(to_json(absorb(load_instance(x_inst, x_fix), BitVector::parse(x_msg), x_seed))); };
    });

    // mmk
    auto* c_mmk = app.add_subcommand("mmk", "Chain one-time-pad encryption (its own inverse)");
    std::vector<std::string> m_keys;
    std::string m_msg;
    c_mmk->add_option("--key", m_keys, "Key bit string; repeat for a chain");
    c_mmk->add_option("--message", m_msg)->required();
    c_mmk->callback([&] {
        action = [&] {
            std::vector<BitVector> keys;
            for (const auto& k : m_keys)
                keys.push_back(BitVector::parse(k));
            os << mmk_encrypt(keys, BitVector::parse(m_msg)).str() << '\n';
        };
    });

    // entropy-table
    auto* c_ent = app.add_subcommand("entropy-table", "Entropy and efficiency of AND/OR/XOR under uniform input");
    unsigned e_k = 8, e_n = 4;
    c_ent->add_option("--k", e_k, "Vector length")->capture_default_str();
    c_ent->add_option("--n", e_n, "Set size for bitwise-set")->capture_default_str();
    c_ent->callback([&] {
        action = [&] {
            os << "op,mode,k,n,h,delta\n";
            for (auto mode : {EntropyMode::single_bit, EntropyMode::vector_chain, EntropyMode::bitwise_pair,
                              EntropyMode::bitwise_set})
                for (auto op : {LogicOp::and_, LogicOp::or_, LogicOp::xor_}) {
                    const unsigned k = mode == EntropyMode::single_bit ? 1 : e_k;
                    const unsigned n = mode == EntropyMode::bitwise_set ? e_n : 2;
                    auto row = logic_entropy(op, mode, k, n);
                    os << to_string(op) << ',' << to_string(mode) << ',' << k << ',' << n << ','
                       << format_info(row.h) << ',' << format_info(row.delta) << '\n';
                }
        };
    });

    // counts
    auto* c_cnt = app.add_subcommand("counts", "Catalan, Stirling (second kind) and Bell numbers");
    std::string cn_kind = "catalan";
    unsigned long cn_n = 0;
    std::optional<unsigned long> cn_k;
    c_cnt->add_option("--kind", cn_kind, "catalan | stirling2 | bell")->capture_default_str();
    c_cnt->add_option("--n", cn_n)->required();
    c_cnt->add_option("--k", cn_k);
    c_cnt->callback([&] {
        action = [&] {
            CountKind kind = cn_kind == "catalan"     ? CountKind::catalan
                             : cn_kind == "stirling2" ? CountKind::stirling2
                             : cn_kind == "bell"      ? CountKind::bell
                                                      : throw rejected_input("unknown kind: " + cn_kind);
            os << to_string(combinatorial_counts(kind, cn_n, cn_k)) << '\n';
        };
    });

    std::vector<const char*> argv{"dit"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (action)
            action();
    } catch (const rejected_input& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const budget_exceeded& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (output.empty()) {
        out << os.str();
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << output << '\n';
            return 1;
        }
        f << os.str();
    }
    return 0;
}

}  // namespace dit::cli
