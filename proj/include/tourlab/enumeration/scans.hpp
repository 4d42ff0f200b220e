#pragma once

#include "tourlab/chromatic.hpp"
#include "tourlab/domination.hpp"
#include "tourlab/enumeration/enumerate.hpp"
#include "tourlab/enumeration/parallel.hpp"
#include "tourlab/enumeration/report.hpp"
#include "tourlab/graph_solvers.hpp"
#include "tourlab/io.hpp"
#include "tourlab/structure/diamond.hpp"
#include "tourlab/structure/numbering.hpp"
#include "tourlab/structure/ordered.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace tourlab {

struct ScanOptions {
    int n_max = 6;
    int threads = 1;
    Deadline deadline = Deadline::none();
};

namespace detail {

inline Json set_json(VertexSet s) { return s.to_vector(); }
inline VertexSet set_from_json(const Json& j) { return VertexSet::from_vector(j.get<std::vector<int>>()); }

inline void check_scan_range(int n_max, const char* what) {
    if (n_max < 1) throw std::invalid_argument(std::string(what) + ": n_max must be at least 1");
    if (n_max > kEnumerateMax) throw CapacityError(std::string(what) + ": n_max limited to 7");
}

/// Calls f(numbering) for every numbering of n vertices in lexicographic
/// order until f returns true.
template <typename F>
bool for_each_numbering(int n, F&& f) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (f(Numbering{p})) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline Json corpus_json(int n_max, std::uint64_t count, const char* numberings) {
    return {{"family", "canonical tournaments"}, {"n_min", 1}, {"n_max", n_max}, {"count", count}, {"numberings", numberings}};
}

class ScanClock {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline int max_out_chi(const Tournament& t) {
    int m = 0;
    for (int v = 0; v < t.size(); ++v) m = std::max(m, chi(t, t.out(v)));
    return m;
}

/// Some cyclic triangle in a is complete to or from some cyclic triangle in b.
inline bool has_triangle_pair(const Tournament& t, VertexSet a, VertexSet b) {
    const auto ta = cyclic_triangles(t, a), tb = cyclic_triangles(t, b);
    for (VertexSet x : ta)
        for (VertexSet y : tb)
            if (complete_to(t, x, y) || complete_to(t, y, x)) return true;
    return false;
}

} // namespace detail

// ---------------------------------------------------------------------------
// chi2: chi(t) >= 2c with every out-neighbourhood of chi < c
// ---------------------------------------------------------------------------

inline SearchReport scan_chi2(int c, const ScanOptions& o) {
    if (c < 0) throw std::invalid_argument("scan_chi2: c must be non-negative");
    detail::check_scan_range(o.n_max, "scan_chi2");
    const detail::ScanClock clock;
    SearchReport r;
    r.scan = "chi2";
    r.parameters = {{"c", c}, {"n_max", o.n_max}};
    std::uint64_t total = 0;
    struct Row {
        bool qualifying = false;
        bool violation = false;
        int chi = 0;
        int max_out = 0;
    };
    for (int n = 1; n <= o.n_max; ++n) {
        const auto codes = canonical_codes(n, o.deadline);
        const auto rows = parallel_map<Row>(codes.size(), o.threads, [&](std::size_t i) {
            const Tournament t = from_code(n, codes[i]);
            Row row;
            row.chi = chi_solve(t, t.vertices(), o.deadline).value;
            if (row.chi < 2 * c) return row;
            row.qualifying = true;
            row.max_out = detail::max_out_chi(t);
            row.violation = row.max_out < c;
            return row;
        });
        std::uint64_t qualifying = 0, violations = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            qualifying += rows[i].qualifying;
            violations += rows[i].violation;
            if (rows[i].violation && !r.witness) {
                r.witness = Json{{"tournament", to_compact(from_code(n, codes[i]))},
                                 {"chi", rows[i].chi},
                                 {"max_out_chi", rows[i].max_out}};
            }
        }
        total += codes.size();
        r.counters.push_back({{"n", n}, {"tournaments", codes.size()}, {"qualifying", qualifying}, {"violations", violations}});
    }
    r.outcome = r.witness ? "witness" : "exhausted";
    r.corpus = detail::corpus_json(o.n_max, total, "none");
    r.wall_time_seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// tribip: disjoint A, B with chi >= d and no cyclic-triangle complete pair
// ---------------------------------------------------------------------------

inline SearchReport scan_tribip(int d, const ScanOptions& o) {
    if (d < 1) throw std::invalid_argument("scan_tribip: d must be at least 1");
    detail::check_scan_range(o.n_max, "scan_tribip");
    const detail::ScanClock clock;
    SearchReport r;
    r.scan = "tribip";
    r.parameters = {{"d", d}, {"n_max", o.n_max}};
    struct Row {
        std::uint64_t pairs = 0;
        std::uint64_t violating_pairs = 0;
        VertexSet a, b;  // first violating pair, shrunk to a minimal one
    };
    std::uint64_t total = 0;
    for (int n = 1; n <= o.n_max; ++n) {
        const auto codes = canonical_codes(n, o.deadline);
        const auto rows = parallel_map<Row>(codes.size(), o.threads, [&](std::size_t i) {
            const Tournament t = from_code(n, codes[i]);
            const ChiTable table(t, o.deadline);
            const auto tris = cyclic_triangles(t, t.vertices());
            const std::size_t m = tris.size();
            std::vector<char> linked(m * m, 0);
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = 0; y < m; ++y)
                    linked[x * m + y] = tris[x].disjoint(tris[y]) &&
                                        (complete_to(t, tris[x], tris[y]) || complete_to(t, tris[y], tris[x]));
            Row row;
            std::uint64_t polls = 0;
            for_each_subset(t.vertices(), [&](VertexSet a) {
                if (a.empty() || table(a) < d) return;
                std::vector<std::size_t> in_a;
                for (std::size_t x = 0; x < m; ++x)
                    if (tris[x].subset_of(a)) in_a.push_back(x);
                for_each_subset(t.vertices() - a, [&](VertexSet b) {
                    o.deadline.poll(++polls);
                    if (b.empty() || b.min() < a.min() || table(b) < d) return;
                    ++row.pairs;
                    bool good = false;
                    for (std::size_t x : in_a) {
                        for (std::size_t y = 0; y < m && !good; ++y)
                            good = linked[x * m + y] && tris[y].subset_of(b);
                        if (good) break;
                    }
                    if (good) return;
                    if (row.violating_pairs++ == 0) {
                        row.a = a;
                        row.b = b;
                    }
                });
            });
            if (row.violating_pairs) {
                // Violations are closed under shrinking either side.
                for (bool changed = true; changed;) {
                    changed = false;
                    for (int v : row.a)
                        if (table(row.a.without(v)) >= d) { row.a.erase(v); changed = true; }
                    for (int v : row.b)
                        if (table(row.b.without(v)) >= d) { row.b.erase(v); changed = true; }
                }
            }
            return row;
        });
        std::uint64_t pairs = 0, bad_tournaments = 0, bad_pairs = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            pairs += rows[i].pairs;
            bad_pairs += rows[i].violating_pairs;
            if (!rows[i].violating_pairs) continue;
            ++bad_tournaments;
            if (!r.witness)
                r.witness = Json{{"tournament", to_compact(from_code(n, codes[i]))},
                                 {"a", detail::set_json(rows[i].a)},
                                 {"b", detail::set_json(rows[i].b)}};
        }
        total += codes.size();
        r.counters.push_back({{"n", n},
                              {"tournaments", codes.size()},
                              {"pairs", pairs},
                              {"violating_pairs", bad_pairs},
                              {"violating_tournaments", bad_tournaments}});
    }
    r.outcome = r.witness ? "witness" : "exhausted";
    r.corpus = detail::corpus_json(o.n_max, total, "none");
    r.wall_time_seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// backdom: dom(t) against the best domination number of a reversed
// subtournament
// ---------------------------------------------------------------------------

inline SearchReport scan_backdom(int c, const ScanOptions& o) {
    if (c < 0) throw std::invalid_argument("scan_backdom: c must be non-negative");
    detail::check_scan_range(o.n_max, "scan_backdom");
    const detail::ScanClock clock;
    SearchReport r;
    r.scan = "backdom";
    r.parameters = {{"c", c}, {"n_max", o.n_max}};
    struct Row {
        int dom = 0;
        int sub_reverse = 0;
    };
    std::map<int, std::pair<int, std::uint64_t>> frontier;  // dom -> (min sub-reverse dom, count)
    std::uint64_t total = 0;
    for (int n = 1; n <= o.n_max; ++n) {
        const auto codes = canonical_codes(n, o.deadline);
        const auto rows = parallel_map<Row>(codes.size(), o.threads, [&](std::size_t i) {
            const Tournament t = from_code(n, codes[i]);
            return Row{dom_solve(t, o.deadline).value, subdom(reverse(t), o.deadline).value};
        });
        std::map<int, std::pair<int, std::uint64_t>> local;
        std::uint64_t violations = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (auto* table : {&frontier, &local}) {
                auto [it, fresh] = table->try_emplace(rows[i].dom, rows[i].sub_reverse, 0);
                if (!fresh) it->second.first = std::min(it->second.first, rows[i].sub_reverse);
                ++it->second.second;
            }
            if (rows[i].dom >= c && rows[i].sub_reverse < c) {
                ++violations;
                if (!r.witness)
                    r.witness = Json{{"tournament", to_compact(from_code(n, codes[i]))},
                                     {"dom", rows[i].dom},
                                     {"sub_reverse_dom", rows[i].sub_reverse}};
            }
        }
        Json table = Json::array();
        for (const auto& [d, v] : local) table.push_back({{"dom", d}, {"min_sub_reverse_dom", v.first}, {"count", v.second}});
        total += codes.size();
        r.counters.push_back({{"n", n}, {"tournaments", codes.size()}, {"violations", violations}, {"frontier", table}});
    }
    Json table = Json::array();
    for (const auto& [d, v] : frontier) table.push_back({{"dom", d}, {"min_sub_reverse_dom", v.first}, {"count", v.second}});
    r.results["frontier"] = table;
    r.outcome = r.witness ? "witness" : "exhausted";
    r.corpus = detail::corpus_json(o.n_max, total, "none");
    r.wall_time_seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// theorem suite: proved statements checked instance by instance
// ---------------------------------------------------------------------------

/// Replaceable solvers, so the harness can be shown to catch a wrong one.
struct TheoremSuiteHooks {
    std::function<int(const Tournament&)> dom = [](const Tournament& t) { return tourlab::dom(t); };
};

namespace detail {

struct SuiteFailure {
    std::string check;
    std::optional<std::vector<int>> numbering;
    Json values;
};

/// First failing check for t, or nullopt. numberings/checks count work done.
inline std::optional<SuiteFailure> theorem_suite_instance(const Tournament& t, const TheoremSuiteHooks& hooks,
                                                          const Deadline& deadline, std::uint64_t& numberings,
                                                          std::uint64_t& checks) {
    const int chi_t = chi_solve(t, t.vertices(), deadline).value;
    const int dom_t = hooks.dom(t);
    ++checks;
    if (dom_t > chi_t) return SuiteFailure{"dom_le_chi", std::nullopt, {{"dom", dom_t}, {"chi", chi_t}}};
    const ChiTable table(t, deadline);
    const auto diamond = max_diamond(t);
    const int diamond_chi = diamond ? diamond->chromatic : 0;
    std::optional<SuiteFailure> fail;
    for_each_numbering(t.size(), [&](const Numbering& nb) {
        deadline.check();
        ++numberings;
        const OrderedTournament ot{t, nb};
        const Graph g = backedge_graph(ot);
        const int chi_g = graph_chi(g), omega = graph_omega(g);
        int local = 0, strong = 0;
        for (int v = 0; v < t.size(); ++v) {
            local = std::max(local, table(g.neighbours(v)));
            strong = std::max(strong, graph_chi(g, g.neighbours(v)));
        }
        checks += 4;
        auto failed = [&](const char* name, Json values) {
            fail = SuiteFailure{name, nb.perm(), std::move(values)};
            return true;
        };
        if (chi_t > chi_g || chi_g > omega * chi_t)
            return failed("backedge_sandwich", {{"chi", chi_t}, {"chi_backedge", chi_g}, {"omega_backedge", omega}});
        if (strong < local) return failed("strong_ge_local", {{"strong", strong}, {"local", local}});
        if (diamond_chi > 2 * local) return failed("diamond_le_twice_local", {{"diamond", diamond_chi}, {"local", local}});
        if (dom_t > local + 1) return failed("dom_le_local_plus_one", {{"dom", dom_t}, {"local", local}});
        return false;
    });
    return fail;
}

} // namespace detail

inline SearchReport scan_theorem_suite(const ScanOptions& o, const TheoremSuiteHooks& hooks = {}) {
    detail::check_scan_range(o.n_max, "scan_theorem_suite");
    const detail::ScanClock clock;
    SearchReport r;
    r.scan = "theorem-suite";
    r.parameters = {{"n_max", o.n_max}};
    struct Row {
        std::uint64_t numberings = 0, checks = 0;
        std::optional<detail::SuiteFailure> failure;
    };
    std::uint64_t total = 0;
    for (int n = 1; n <= o.n_max; ++n) {
        const auto codes = canonical_codes(n, o.deadline);
        const auto rows = parallel_map<Row>(codes.size(), o.threads, [&](std::size_t i) {
            Row row;
            row.failure = detail::theorem_suite_instance(from_code(n, codes[i]), hooks, o.deadline, row.numberings, row.checks);
            return row;
        });
        std::uint64_t numberings = 0, checks = 0, violations = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            numberings += rows[i].numberings;
            checks += rows[i].checks;
            if (!rows[i].failure) continue;
            ++violations;
            if (!r.witness) {
                const auto& f = *rows[i].failure;
                r.witness = Json{{"tournament", to_compact(from_code(n, codes[i]))},
                                 {"check", f.check},
                                 {"numbering", f.numbering ? Json(*f.numbering) : Json(nullptr)},
                                 {"values", f.values}};
            }
        }
        total += codes.size();
        r.counters.push_back({{"n", n}, {"tournaments", codes.size()}, {"numberings", numberings}, {"checks", checks}, {"violations", violations}});
    }
    r.outcome = r.witness ? "witness" : "exhausted";
    r.corpus = detail::corpus_json(o.n_max, total, "all");
    r.wall_time_seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// legends: largest dom among ordered tournaments avoiding (h, sigma)
// ---------------------------------------------------------------------------

inline long long legend_bound(int h) { return static_cast<long long>(h) << h; }

inline SearchReport legend_frontier(const Tournament& h, const Numbering& sigma, const ScanOptions& o) {
    if (h.size() < 1) throw std::invalid_argument("legend_frontier: h must have at least one vertex");
    if (!is_transitive(h)) throw std::invalid_argument("legend_frontier: h must be transitive");
    if (sigma.size() != h.size()) throw std::invalid_argument("legend_frontier: sigma does not number h");
    detail::check_scan_range(o.n_max, "legend_frontier");
    const detail::ScanClock clock;
    const OrderedTournament pattern{h, sigma};
    const long long bound = legend_bound(h.size());
    SearchReport r;
    r.scan = "legends";
    r.parameters = {{"h", to_compact(h)}, {"sigma", sigma.perm()}, {"n_max", o.n_max}};
    struct Row {
        int dom = 0;
        std::uint64_t numberings = 0;
        std::optional<std::vector<int>> avoiding;  // first numbering avoiding the pattern
    };
    int frontier = 0;
    Json example = nullptr;
    std::uint64_t total = 0;
    for (int n = 1; n <= o.n_max; ++n) {
        const auto codes = canonical_codes(n, o.deadline);
        const auto rows = parallel_map<Row>(codes.size(), o.threads, [&](std::size_t i) {
            const Tournament t = from_code(n, codes[i]);
            Row row;
            row.dom = dom_solve(t, o.deadline).value;
            detail::for_each_numbering(n, [&](const Numbering& nb) {
                o.deadline.poll(++row.numberings);
                if (ordered_contains({t, nb}, pattern)) return false;
                row.avoiding = nb.perm();
                return true;
            });
            return row;
        });
        std::uint64_t numberings = 0, avoiding = 0;
        int max_dom = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            numberings += rows[i].numberings;
            if (!rows[i].avoiding) continue;
            ++avoiding;
            max_dom = std::max(max_dom, rows[i].dom);
            const Json item{{"tournament", to_compact(from_code(n, codes[i]))}, {"numbering", *rows[i].avoiding}, {"dom", rows[i].dom}};
            if (example.is_null() || rows[i].dom > frontier) {
                example = item;
                frontier = rows[i].dom;
            }
            if (rows[i].dom >= bound && !r.witness) r.witness = item;
        }
        total += codes.size();
        r.counters.push_back({{"n", n}, {"tournaments", codes.size()}, {"numberings", numberings},
                              {"avoiding_tournaments", avoiding}, {"max_dom_avoiding", max_dom}});
    }
    r.results = {{"frontier", frontier}, {"bound", bound}, {"frontier_example", example}};
    r.outcome = r.witness ? "witness" : "exhausted";
    r.corpus = detail::corpus_json(o.n_max, total, "all");
    r.wall_time_seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// Re-validation of serialized witnesses
// ---------------------------------------------------------------------------

/// Re-checks the witness of a report against its defining predicate using
/// only the serialized data. Reports without a witness are trivially valid.
inline bool revalidate(const SearchReport& r) {
    if (!r.witness) return true;
    const Json& w = *r.witness;
    const Tournament t = parse_compact(w.at("tournament").get<std::string>());
    const Json& p = r.parameters;
    if (r.scan == "chi2") {
        const int c = p.at("c").get<int>();
        return chi(t) >= 2 * c && detail::max_out_chi(t) < c;
    }
    if (r.scan == "tribip") {
        const int d = p.at("d").get<int>();
        const VertexSet a = detail::set_from_json(w.at("a")), b = detail::set_from_json(w.at("b"));
        if (!a.subset_of(t.vertices()) || !b.subset_of(t.vertices()) || a.intersects(b)) return false;
        return chi(t, a) >= d && chi(t, b) >= d && !detail::has_triangle_pair(t, a, b);
    }
    if (r.scan == "backdom") {
        const int c = p.at("c").get<int>();
        return dom(t) >= c && subdom(reverse(t)).value < c;
    }
    if (r.scan == "legends") {
        const Tournament h = parse_compact(p.at("h").get<std::string>());
        const Numbering sigma{p.at("sigma").get<std::vector<int>>()};
        const Numbering nb{w.at("numbering").get<std::vector<int>>()};
        return !ordered_contains({t, nb}, {h, sigma}) && dom(t) >= legend_bound(h.size());
    }
    if (r.scan == "theorem-suite") {
        // Valid only if the unmodified solvers reproduce the failure.
        std::uint64_t numberings = 0, checks = 0;
        return detail::theorem_suite_instance(t, {}, Deadline::none(), numberings, checks).has_value();
    }
    throw std::invalid_argument("revalidate: unknown scan '" + r.scan + "'");
}

} // namespace tourlab
