#pragma once

#include "CLI11.hpp"
#include "tourlab/tourlab.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace tourlab::cli {

enum ExitCode : int { kOk = 0, kWitness = 1, kUsage = 2, kCapacity = 3, kDeadline = 4 };

struct Globals {
    bool json = false;
    std::uint64_t seed = 1;
    double deadline_seconds = 0.0;
    int nmax = 5;
    int threads = 1;
    std::string input;   // empty: stdin
    std::string output;  // empty: stdout

    Deadline deadline() const {
        return deadline_seconds > 0 ? Deadline::after(std::chrono::duration<double>(deadline_seconds)) : Deadline::none();
    }
};

/// "c3", "single", "transitive:N", "s_t:T", "t_t:T", "paley:Q" or
/// "compact:n:hex".
inline Tournament parse_family(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto number = [&]() {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(arg, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (arg.empty() || used != arg.size()) throw std::invalid_argument("family '" + text + "' needs an integer argument");
        return v;
    };
    if (name == "c3") return cyclic_triangle();
    if (name == "single") return single_vertex();
    if (name == "transitive") {
        const int n = number();
        check_capacity(n, "transitive");
        if (n < 0) throw std::invalid_argument("transitive: n must be non-negative");
        return Tournament::transitive(n);
    }
    if (name == "s_t") return s_t(number());
    if (name == "t_t") return t_t(number());
    if (name == "paley") return paley(number());
    if (name == "compact") return parse_compact(arg);
    throw std::invalid_argument("unknown tournament family '" + text + "'");
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        std::istringstream words(tok);
        std::string w;
        while (words >> w) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(w, &used);
            } catch (const std::logic_error&) {
                used = 0;
            }
            if (used != w.size() || used == 0) throw std::invalid_argument("expected a list of integers, got '" + text + "'");
            out.push_back(v);
        }
    }
    return out;
}

inline Json set_json(VertexSet s) { return s.to_vector(); }

inline std::string set_text(VertexSet s) { return s.to_string(); }

inline std::string perm_text(const Numbering& nb) {
    std::string s;
    for (int v : nb.perm()) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

/// Reads a tmt/1 document or a single compact line.
inline Tournament read_tournament(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::istringstream probe(text);
    std::string first;
    std::getline(probe, first);
    if (first.find(':') != std::string::npos) {
        std::string rest, line;
        while (std::getline(probe, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError(2, 1, "compact input must be a single line");
        while (!first.empty() && (first.back() == '\r' || first.back() == ' ')) first.pop_back();
        return parse_compact(first);
    }
    return parse_tmt(text);
}

class Runner {
public:
    Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    int run(std::vector<std::string> args);

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    Globals g_;
    int code_ = kOk;
    std::unique_ptr<std::ofstream> file_out_;

    std::ostream& out() {
        if (g_.output.empty()) return out_;
        if (!file_out_) {
            file_out_ = std::make_unique<std::ofstream>(g_.output, std::ios::binary);
            if (!*file_out_) throw std::invalid_argument("cannot open output file '" + g_.output + "'");
        }
        return *file_out_;
    }

    Tournament input() {
        if (g_.input.empty()) return read_tournament(in_);
        std::ifstream f(g_.input, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open input file '" + g_.input + "'");
        return read_tournament(f);
    }

    void emit(const Json& j) { out() << j.dump(2) << '\n'; }

    void emit_report(const SearchReport& r);

    // gen
    void gen(const std::string& family, const Json& opts);
};

inline void Runner::emit_report(const SearchReport& r) {
    if (!revalidate(r)) throw std::logic_error("scan produced a witness that fails re-validation");
    if (g_.json) {
        emit(to_json(r));
    } else {
        auto& o = out();
        o << r.outcome << '\n';
        o << "scan: " << r.scan << "  parameters: " << r.parameters.dump() << '\n';
        o << "corpus: " << r.corpus.at("count").get<std::uint64_t>() << " canonical tournaments, n = 1.."
          << r.corpus.at("n_max").get<int>() << ", numberings: " << r.corpus.at("numberings").get<std::string>() << '\n';
        for (const auto& row : r.counters) o << "  " << row.dump() << '\n';
        if (!r.results.empty()) o << "results: " << r.results.dump() << '\n';
        if (r.witness) o << "witness: " << r.witness->dump() << '\n';
        o << "wall time: " << r.wall_time_seconds << " s\n";
    }
    code_ = r.found() ? kWitness : kOk;
}

inline int Runner::run(std::vector<std::string> args) {
    CLI::App app{"Exact computations on small tournaments", "tourlab"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", g_.json, "JSON output");
    app.add_option("--seed", g_.seed, "RNG seed")->capture_default_str();
    app.add_option("--deadline-seconds", g_.deadline_seconds, "Abort long searches after this many seconds (0: none)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--nmax", g_.nmax, "Largest n for scans and enumeration")->capture_default_str();
    app.add_option("--threads", g_.threads, "Worker threads for scans")->check(CLI::PositiveNumber);
    app.add_option("-i,--input", g_.input, "Input file (tmt/1 or compact); default stdin");
    app.add_option("-o,--output", g_.output, "Output file; default stdout");

    std::function<void()> action;

    // ---- gen ------------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "Generate a tournament (tmt/1)");
    gen_cmd->require_subcommand(1);
    int opt_n = 0, opt_t = 0, opt_q = 0, opt_pairs = 0, opt_k = 0, opt_r = 0;
    std::string matching, witnesses, base;
    auto* s = gen_cmd->add_subcommand("transitive", "Transitive tournament, i -> j for i < j");
    s->add_option("--n", opt_n)->required();
    s->callback([&] { action = [&] { this->gen("transitive", {{"n", opt_n}}); }; });
    s = gen_cmd->add_subcommand("c3", "Cyclic triangle");
    s->callback([&] { action = [&] { this->gen("c3", {}); }; });
    s = gen_cmd->add_subcommand("s_t", "S_t = Delta(S_{t-1}, S_{t-1}, 1)");
    s->add_option("--t", opt_t)->required();
    s->callback([&] { action = [&] { this->gen("s_t", {{"t", opt_t}}); }; });
    s = gen_cmd->add_subcommand("t_t", "T_t = Delta(T_{t-1}, T_{t-1}, T_{t-1})");
    s->add_option("--t", opt_t)->required();
    s->callback([&] { action = [&] { this->gen("t_t", {{"t", opt_t}}); }; });
    s = gen_cmd->add_subcommand("paley", "Paley tournament on Z_q");
    s->add_option("--q", opt_q)->required();
    s->callback([&] { action = [&] { this->gen("paley", {{"q", opt_q}}); }; });
    s = gen_cmd->add_subcommand("random", "Uniform random tournament from --seed");
    s->add_option("--n", opt_n)->required();
    s->callback([&] { action = [&] { this->gen("random", {{"n", opt_n}}); }; });
    s = gen_cmd->add_subcommand("crossing", "Crossing tournament of a matching");
    s->add_option("--matching", matching, "Pairs as 'a-b' tokens");
    s->add_option("--pairs", opt_pairs, "Random matching with this many pairs (uses --seed)");
    s->callback([&] { action = [&] { this->gen("crossing", {{"matching", matching}, {"pairs", opt_pairs}}); }; });
    s = gen_cmd->add_subcommand("u_k", "Level-k crossing construction");
    s->add_option("--k", opt_k)->required();
    s->add_option("--witnesses", witnesses, "Comma-separated N for levels 2..k");
    s->callback([&] { action = [&] { this->gen("u_k", {{"k", opt_k}, {"witnesses", witnesses}}); }; });
    s = gen_cmd->add_subcommand("k_majority", "Majority of 2k-1 random orderings (uses --seed)");
    s->add_option("--n", opt_n)->required();
    s->add_option("--k", opt_k)->required();
    s->callback([&] { action = [&] { this->gen("k_majority", {{"n", opt_n}, {"k", opt_k}}); }; });
    s = gen_cmd->add_subcommand("chain_power", "r chained copies of a base tournament");
    s->add_option("--base", base, "Family, e.g. c3 or s_t:2")->default_val("c3");
    s->add_option("--r", opt_r)->required();
    s->callback([&] { action = [&] { this->gen("chain_power", {{"base", base}, {"r", opt_r}}); }; });

    // ---- solve ----------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "Exact parameters of the input tournament");
    solve->require_subcommand(1);
    std::string pattern, law_file, set_text_opt;
    int out_of = -1;
    solve->add_subcommand("chi", "Chromatic number (transitive classes)")->callback([&] {
        action = [&] {
            const Tournament t = input();
            const auto r = chi_solve(t, t.vertices(), g_.deadline());
            if (g_.json) {
                Json cls = Json::array();
                for (VertexSet c : r.classes) cls.push_back(set_json(c));
                emit({{"measure", "chi"}, {"value", r.value}, {"classes", cls}});
            } else {
                out() << r.value << '\n';
                for (VertexSet c : r.classes) out() << "class " << set_text(c) << '\n';
            }
        };
    });
    auto* chi_h_cmd = solve->add_subcommand("chi_h", "Fewest parts with no copy of a pattern");
    chi_h_cmd->add_option("--pattern", pattern, "Family of the forbidden pattern")->required();
    chi_h_cmd->callback([&] {
        action = [&] {
            const Tournament t = input();
            const Tournament h = parse_family(pattern);
            const auto r = chi_h_solve(t, h, g_.deadline());
            Json cls = Json::array();
            for (VertexSet c : r.classes) cls.push_back(set_json(c));
            if (g_.json) {
                emit({{"measure", "chi_h"}, {"pattern", to_compact(h)}, {"value", r.value}, {"classes", cls}});
            } else {
                out() << r.value << '\n';
                for (VertexSet c : r.classes) out() << "class " << set_text(c) << '\n';
            }
        };
    });
    auto* law_cmd = solve->add_subcommand("chi_law", "Law chromatic number (default law: all cyclic triangles)");
    law_cmd->add_option("--law", law_file, "File with one member per line as vertex lists");
    law_cmd->callback([&] {
        action = [&] {
            const Tournament t = input();
            Law law = Law::triangles(t);
            if (!law_file.empty()) {
                std::ifstream f(law_file);
                if (!f) throw std::invalid_argument("cannot open law file '" + law_file + "'");
                law.members.clear();
                std::string line;
                while (std::getline(f, line))
                    if (line.find_first_not_of(" \t\r") != std::string::npos)
                        law.members.push_back(VertexSet::from_vector(parse_int_list(line)));
            }
            const auto r = chi_law_solve(t, law, g_.deadline());
            Json cls = Json::array();
            for (VertexSet c : r.classes) cls.push_back(set_json(c));
            if (g_.json) {
                emit({{"measure", "chi_law"}, {"members", law.members.size()}, {"value", r.value}, {"classes", cls}});
            } else {
                out() << r.value << '\n';
                for (VertexSet c : r.classes) out() << "class " << set_text(c) << '\n';
            }
        };
    });
    solve->add_subcommand("dom", "Domination number")->callback([&] {
        action = [&] {
            const Tournament t = input();
            const auto r = dom_solve(t, g_.deadline());
            if (g_.json) emit({{"measure", "dom"}, {"value", r.value}, {"witness", set_json(r.witness)}});
            else out() << r.value << '\n' << "dominating set " << set_text(r.witness) << '\n';
        };
    });
    auto* edom_cmd = solve->add_subcommand("edom", "External domination number of a set (default: all vertices)");
    edom_cmd->add_option("--set", set_text_opt, "Comma-separated vertices");
    edom_cmd->add_option("--out-of", out_of, "Use the out-neighbourhood of this vertex");
    edom_cmd->callback([&] {
        action = [&] {
            const Tournament t = input();
            VertexSet a = t.vertices();
            if (!set_text_opt.empty() && out_of >= 0) throw std::invalid_argument("edom: give --set or --out-of, not both");
            if (!set_text_opt.empty()) {
                for (int v : parse_int_list(set_text_opt))
                    if (v < 0 || v >= t.size()) throw std::invalid_argument("edom: vertex " + std::to_string(v) + " out of range");
                a = VertexSet::from_vector(parse_int_list(set_text_opt));
            }
            if (out_of >= 0) {
                if (out_of >= t.size()) throw std::invalid_argument("edom: --out-of vertex out of range");
                a = t.out(out_of);
            }
            const auto r = edom_solve(t, a, g_.deadline());
            if (g_.json) emit({{"measure", "edom"}, {"set", set_json(a)}, {"value", r.value}, {"witness", set_json(r.witness)}});
            else out() << r.value << '\n' << "external dominating set " << set_text(r.witness) << '\n';
        };
    });
    solve->add_subcommand("subdom", "Largest domination number of a subtournament")->callback([&] {
        action = [&] {
            const Tournament t = input();
            const auto r = subdom(t, g_.deadline(), 20000, g_.seed);
            if (g_.json) emit({{"measure", "subdom"}, {"value", r.value}, {"witness", set_json(r.witness)}, {"exact", r.exact}});
            else out() << r.value << '\n' << "subset " << set_text(r.witness) << (r.exact ? "" : "\n(lower bound, sampled)") << '\n';
        };
    });

    // ---- analyze --------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "Structural analysis of the input tournament");
    analyze->require_subcommand(1);
    std::string order_text;
    int cparam = 0;
    bool heuristic = false;
    auto read_order = [&](const Tournament& t) {
        if (order_text.empty()) return Numbering::identity(t.size());
        Numbering nb{parse_int_list(order_text)};
        if (nb.size() != t.size()) throw std::invalid_argument("--order must list every vertex once");
        return nb;
    };
    auto* an_num = analyze->add_subcommand("numbering", "Statistics of a numbering (default: identity)");
    an_num->add_option("--order", order_text, "Vertices from left to right, comma-separated");
    an_num->callback([&] {
        action = [&] {
            const Tournament t = input();
            const OrderedTournament ot{t, read_order(t)};
            const Graph g = backedge_graph(ot);
            const int local = local_chromatic_number(ot), strong = strong_chromatic_number(ot), clique = numbering_clique(ot);
            const int chi_g = graph_chi(g);
            if (g_.json) {
                Json sets = Json::array();
                for (VertexSet s : local_sets(ot)) sets.push_back(set_json(s));
                emit({{"order", ot.order.perm()},
                      {"local", local},
                      {"strong", strong},
                      {"clique", clique},
                      {"backedge_chi", chi_g},
                      {"backedge_edges", g.edge_count()},
                      {"local_sets", sets}});
            } else {
                out() << local << '\n'
                      << "order " << perm_text(ot.order) << '\n'
                      << "local " << local << "\nstrong " << strong << "\nclique " << clique << "\nbackedge chi " << chi_g
                      << '\n';
            }
        };
    });
    analyze->add_subcommand("diamond", "Diamond of maximum chromatic number")->callback([&] {
        action = [&] {
            const auto d = max_diamond(input());
            if (g_.json) {
                if (!d) emit({{"diamond", nullptr}, {"value", 0}});
                else emit({{"value", d->chromatic}, {"diamond", {{"a", d->a}, {"b", d->b}, {"p", set_json(d->p)}, {"q", set_json(d->q)}}}});
            } else if (!d) {
                out() << "0\nno diamond\n";
            } else {
                out() << d->chromatic << '\n'
                      << "a " << d->a << " b " << d->b << " P " << set_text(d->p) << " Q " << set_text(d->q) << '\n';
            }
        };
    });
    auto* an_pair = analyze->add_subcommand("pair", "Best complete pair");
    an_pair->add_option("--c", cparam, "Also report c-goodness for this c");
    an_pair->add_flag("--heuristic", heuristic, "Allow the inexact search for n > 15");
    an_pair->callback([&] {
        action = [&] {
            const auto p = best_complete_pair(input(), heuristic);
            const bool good = cparam <= 0 || p.quality >= cparam;
            if (g_.json)
                emit({{"value", p.quality}, {"a", set_json(p.a)}, {"b", set_json(p.b)}, {"exact", p.exact}, {"c", cparam}, {"c_good", good}});
            else
                out() << p.quality << '\n'
                      << "A " << set_text(p.a) << " => B " << set_text(p.b) << (p.exact ? "" : " (heuristic)") << '\n'
                      << cparam << "-good " << (good ? "yes" : (p.exact ? "no" : "unknown")) << '\n';
        };
    });
    auto* an_poset = analyze->add_subcommand("poset", "Poset-tournament recognition");
    an_poset->add_option("--order", order_text, "Also test this numbering for the ordered condition");
    an_poset->callback([&] {
        action = [&] {
            const Tournament t = input();
            const auto w = is_poset_tournament(t);
            std::optional<bool> ordered;
            if (!order_text.empty()) ordered = is_ordered_poset({t, read_order(t)});
            if (g_.json) {
                Json j{{"poset", w.has_value()}, {"circular_order", w ? Json(w->perm()) : Json(nullptr)}};
                if (ordered) j["ordered_poset"] = *ordered;
                emit(j);
            } else {
                out() << (w ? "true" : "false") << '\n';
                if (w) out() << "circular order " << perm_text(*w) << '\n';
                if (ordered) out() << "ordered poset " << (*ordered ? "true" : "false") << '\n';
            }
        };
    });
    auto* an_inout = analyze->add_subcommand("inout", "Vertex with both neighbourhoods of chromatic number >= c");
    an_inout->add_option("--c", cparam)->required();
    an_inout->callback([&] {
        action = [&] {
            const Tournament t = input();
            const auto v = inout_witness(t, cparam);
            if (g_.json) emit({{"c", cparam}, {"vertex", v ? Json(*v) : Json(nullptr)}});
            else out() << (v ? std::to_string(*v) : "none") << '\n';
        };
    });

    // ---- numbering ------------------------------------------------------
    auto* numbering = app.add_subcommand("numbering", "Numbering searches");
    numbering->require_subcommand(1);
    auto* nm_min = numbering->add_subcommand("min-local", "Numbering of least local chromatic number");
    nm_min->add_flag("--heuristic", heuristic, "Allow the inexact construction for n > 9");
    nm_min->callback([&] {
        action = [&] {
            const auto r = min_local_numbering(input(), heuristic, g_.deadline());
            if (g_.json) emit({{"value", r.value}, {"order", r.order.perm()}, {"exact", r.exact}});
            else out() << r.value << '\n' << "order " << perm_text(r.order) << (r.exact ? "" : "\n(heuristic)") << '\n';
        };
    });
    auto* nm_df = numbering->add_subcommand("diamond-free", "Numbering from the diamond threshold digraph, or a diamond");
    nm_df->add_option("--c", cparam)->required()->check(CLI::NonNegativeNumber);
    nm_df->callback([&] {
        action = [&] {
            const Tournament t = input();
            const auto r = diamond_free_numbering(t, cparam);
            if (const auto* nb = std::get_if<Numbering>(&r)) {
                const int local = local_chromatic_number({t, *nb});
                if (g_.json) emit({{"outcome", "numbering"}, {"order", nb->perm()}, {"local", local}});
                else out() << "numbering\n" << "order " << perm_text(*nb) << "\nlocal " << local << '\n';
            } else {
                const auto& d = std::get<Diamond>(r);
                if (g_.json)
                    emit({{"outcome", "diamond"},
                          {"diamond", {{"a", d.a}, {"b", d.b}, {"p", set_json(d.p)}, {"q", set_json(d.q)}}},
                          {"value", d.chromatic}});
                else
                    out() << "diamond\n"
                          << "a " << d.a << " b " << d.b << " P " << set_text(d.p) << " Q " << set_text(d.q) << "\nvalue "
                          << d.chromatic << '\n';
            }
        };
    });

    // ---- scan -----------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "Exhaustive scans over canonical tournaments (exit 1: witness found)");
    scan->require_subcommand(1);
    std::string h_family = "transitive:2", sigma_text;
    auto opts = [&] { return ScanOptions{g_.nmax, g_.threads, g_.deadline()}; };
    auto* sc_chi2 = scan->add_subcommand("chi2", "chi >= 2c but every out-neighbourhood has chi < c");
    sc_chi2->add_option("--c", cparam)->required();
    sc_chi2->callback([&] { action = [&] { emit_report(scan_chi2(cparam, opts())); }; });
    auto* sc_tri = scan->add_subcommand("tribip", "Disjoint A, B of chi >= d without a cyclic-triangle complete pair");
    sc_tri->add_option("--d", cparam)->required();
    sc_tri->callback([&] { action = [&] { emit_report(scan_tribip(cparam, opts())); }; });
    auto* sc_back = scan->add_subcommand("backdom", "dom against the best reversed-subtournament dom");
    sc_back->add_option("--c", cparam)->required();
    sc_back->callback([&] { action = [&] { emit_report(scan_backdom(cparam, opts())); }; });
    auto* sc_leg = scan->add_subcommand("legends", "Largest dom of an ordered tournament avoiding (h, sigma)");
    sc_leg->add_option("--pattern", h_family, "Transitive pattern as a family")->capture_default_str();
    sc_leg->add_option("--sigma", sigma_text, "Numbering of h, comma-separated (default identity)");
    sc_leg->callback([&] {
        action = [&] {
            const Tournament h = parse_family(h_family);
            const Numbering sigma = sigma_text.empty() ? Numbering::identity(h.size()) : Numbering{parse_int_list(sigma_text)};
            emit_report(legend_frontier(h, sigma, opts()));
        };
    });
    scan->add_subcommand("theorem-suite", "Check proved statements on every instance")->callback([&] {
        action = [&] { emit_report(scan_theorem_suite(opts())); };
    });

    // ---- enum -----------------------------------------------------------
    auto* en = app.add_subcommand("enum", "Write the canonical corpus (one compact tournament per line)");
    int enum_n = -1;
    bool count_only = false;
    en->add_option("--n", enum_n, "Vertex count (default: all n from 1 to --nmax)");
    en->add_flag("--count", count_only, "Print class counts only");
    en->callback([&] {
        action = [&] {
            std::vector<int> ns;
            if (enum_n >= 0) ns.push_back(enum_n);
            else for (int n = 1; n <= g_.nmax; ++n) ns.push_back(n);
            Json counts = Json::array();
            std::vector<Tournament> all;
            for (int n : ns) {
                const auto c = enumerate_all(n, g_.deadline());
                counts.push_back({{"n", n}, {"count", c.size()}});
                all.insert(all.end(), c.begin(), c.end());
            }
            if (g_.json) {
                Json j{{"counts", counts}};
                if (!count_only) {
                    Json list = Json::array();
                    for (const auto& t : all) list.push_back(to_compact(t));
                    j["tournaments"] = list;
                }
                emit(j);
            } else if (count_only) {
                for (const auto& c : counts) out() << c.at("n").get<int>() << ' ' << c.at("count").get<std::size_t>() << '\n';
            } else {
                write_corpus(out(), all);
            }
        };
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out_ << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out_ << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err_ << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    try {
        if (g_.nmax < 1) throw std::invalid_argument("--nmax must be at least 1");
        if (!action) throw std::invalid_argument("no command given");
        action();
        if (file_out_) file_out_->flush();
        return code_;
    } catch (const ParseError& e) {
        err_ << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        err_ << "capacity error: " << e.what() << '\n';
        return kCapacity;
    } catch (const DeadlineExceeded& e) {
        err_ << "deadline exceeded after " << g_.deadline_seconds << " s\n";
        return kDeadline;
    } catch (const std::invalid_argument& e) {
        err_ << "invalid argument: " << e.what() << '\n';
        return kUsage;
    } catch (const Json::exception& e) {
        err_ << "error: " << e.what() << '\n';
        return kUsage;
    }
}

inline void Runner::gen(const std::string& family, const Json& o) {
    Tournament t;
    Json extra = Json::object();
    std::mt19937_64 rng(g_.seed);
    if (family == "transitive") {
        const int n = o.at("n");
        if (n < 0) throw std::invalid_argument("transitive: n must be non-negative");
        check_capacity(n, "transitive");
        t = Tournament::transitive(n);
    } else if (family == "c3") {
        t = cyclic_triangle();
    } else if (family == "s_t") {
        t = s_t(o.at("t"));
    } else if (family == "t_t") {
        t = t_t(o.at("t"));
    } else if (family == "paley") {
        t = paley(o.at("q"));
    } else if (family == "random") {
        const int n = o.at("n");
        if (n < 0) throw std::invalid_argument("random: n must be non-negative");
        t = random_tournament(n, g_.seed);
    } else if (family == "crossing") {
        const std::string text = o.at("matching");
        const int pairs = o.at("pairs");
        if (text.empty() == (pairs <= 0)) throw std::invalid_argument("crossing: give exactly one of --matching or --pairs");
        if (pairs > kMaxVertices) throw CapacityError("crossing: more than 64 pairs");
        const IntegerMatching m = text.empty() ? random_matching(pairs, rng) : parse_matching(text);
        const auto c = crossing(m);
        t = c.t;
        extra["matching"] = to_matching_text(c.matching);
    } else if (family == "u_k") {
        std::vector<long long> w;
        for (int v : parse_int_list(o.at("witnesses").get<std::string>())) w.push_back(v);
        const auto u = u_k(o.at("k"), w);
        t = u.tournament.t;
        extra["matching"] = to_matching_text(u.tournament.matching);
    } else if (family == "k_majority") {
        const int n = o.at("n"), k = o.at("k");
        if (k < 1) throw std::invalid_argument("k_majority: k must be at least 1");
        if (n < 0) throw std::invalid_argument("k_majority: n must be non-negative");
        check_capacity(n, "k_majority");
        std::vector<Numbering> orders;
        Json list = Json::array();
        for (int i = 0; i < 2 * k - 1; ++i) {
            orders.push_back(random_numbering(n, rng));
            list.push_back(orders.back().perm());
        }
        t = k_majority(orders, k);
        extra["orderings"] = list;
    } else if (family == "chain_power") {
        const auto cp = chain_power(parse_family(o.at("base")), o.at("r"));
        t = cp.t;
        Json parts = Json::array();
        for (VertexSet p : cp.parts) parts.push_back(set_json(p));
        extra["parts"] = parts;
    }
    if (g_.json) {
        Json j{{"family", family}, {"parameters", o}, {"n", t.size()}, {"tmt", to_tmt(t)}, {"compact", to_compact(t)}};
        for (auto& [key, v] : extra.items()) j[key] = v;
        emit(j);
    } else {
        out() << to_tmt(t);
    }
}

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Runner r(in, out, err);
    return r.run(args);
}

} // namespace tourlab::cli
