#pragma once

#include "tourlab/errors.hpp"
#include "tourlab/tournament.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tourlab {

inline constexpr int kGraphSolverMax = 40;

struct CliqueResult {
    int value = 0;
    VertexSet clique;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Greedy sequential colouring of p, used as the clique upper bound: returns
/// vertices in colour order with their colour numbers.
inline void colour_sort(const Graph& g, VertexSet p, std::vector<int>& order, std::vector<int>& bound) {
    order.clear();
    bound.clear();
    int colour = 0;
    VertexSet uncoloured = p;
    while (!uncoloured.empty()) {
        ++colour;
        VertexSet avail = uncoloured;
        while (!avail.empty()) {
            const int v = avail.min();
            avail -= g.neighbours(v).with(v);
            uncoloured.erase(v);
            order.push_back(v);
            bound.push_back(colour);
        }
    }
}

struct CliqueSearch {
    const Graph& g;
    const Deadline& deadline;
    std::uint64_t nodes = 0;
    VertexSet best{};

    void expand(VertexSet cur, VertexSet p) {
        deadline.poll(++nodes);
        std::vector<int> order, bound;
        colour_sort(g, p, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (cur.size() + bound[i] <= best.size()) return;
            const int v = order[i];
            const VertexSet next = p & g.neighbours(v);
            if (next.empty()) {
                if (cur.size() + 1 > best.size()) best = cur.with(v);
            } else {
                expand(cur.with(v), next);
            }
            p.erase(v);
        }
    }
};

} // namespace detail

/// Exact clique number restricted to s (branch and bound with a greedy
/// colouring bound).
inline CliqueResult graph_omega_solve(const Graph& g, VertexSet s, const Deadline& deadline = Deadline::none()) {
    if (g.size() > kGraphSolverMax) throw CapacityError("graph_omega: n exceeds 40");
    CliqueResult r;
    if (s.empty()) return r;
    detail::CliqueSearch search{g, deadline};
    search.expand(VertexSet{}, s);
    r.value = search.best.size();
    r.clique = search.best;
    r.nodes = search.nodes;
    return r;
}
inline int graph_omega(const Graph& g, VertexSet s) { return graph_omega_solve(g, s).value; }
inline int graph_omega(const Graph& g) { return graph_omega(g, g.vertices()); }

struct ColouringResult {
    int value = 0;
    std::vector<int> colour;  // colour[v] in [0, value) for v in the set, -1 elsewhere
    std::uint64_t nodes = 0;
};

namespace detail {

/// DSATUR branch and bound.
struct ColourSearch {
    const Graph& g;
    VertexSet s;
    const Deadline& deadline;
    std::uint64_t nodes = 0;
    int best = 0;
    std::vector<int> best_colour{};
    std::vector<int> colour{};
    std::vector<std::uint64_t> sat{};  // colours seen in each vertex's neighbourhood

    void search(VertexSet left, int used) {
        deadline.poll(++nodes);
        if (used >= best) return;
        if (left.empty()) {
            best = used;
            best_colour = colour;
            return;
        }
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v : left) {
            const int sd = std::popcount(sat[v]);
            const int deg = (g.neighbours(v) & left).size();
            if (sd > pick_sat || (sd == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sd;
                pick_deg = deg;
            }
        }
        const int limit = std::min(used + 1, best - 1);
        for (int c = 0; c < limit; ++c) {
            if ((sat[pick] >> c) & 1u) continue;
            colour[pick] = c;
            std::vector<std::pair<int, std::uint64_t>> saved;
            for (int u : g.neighbours(pick) & left) {
                saved.emplace_back(u, sat[u]);
                sat[u] |= std::uint64_t{1} << c;
            }
            search(left.without(pick), std::max(used, c + 1));
            for (const auto& [u, old] : saved) sat[u] = old;
            colour[pick] = -1;
        }
    }
};

} // namespace detail

/// Exact chromatic number of g restricted to s.
inline ColouringResult graph_chi_solve(const Graph& g, VertexSet s, const Deadline& deadline = Deadline::none()) {
    if (g.size() > kGraphSolverMax) throw CapacityError("graph_chi: n exceeds 40");
    ColouringResult r;
    r.colour.assign(g.size(), -1);
    if (s.empty()) return r;
    detail::ColourSearch search{g, s, deadline};
    search.best = s.size() + 1;
    search.colour.assign(g.size(), -1);
    search.sat.assign(g.size(), 0);
    // Start from a maximum clique: its colours are forced up to symmetry.
    const CliqueResult k = graph_omega_solve(g, s, deadline);
    int c = 0;
    VertexSet left = s;
    for (int v : k.clique) {
        search.colour[v] = c;
        for (int u : g.neighbours(v)) search.sat[u] |= std::uint64_t{1} << c;
        left.erase(v);
        ++c;
    }
    search.search(left, c);
    r.value = search.best;
    r.colour = search.best_colour;
    r.nodes = search.nodes + k.nodes;
    return r;
}
inline int graph_chi(const Graph& g, VertexSet s) { return graph_chi_solve(g, s).value; }
inline int graph_chi(const Graph& g) { return graph_chi(g, g.vertices()); }

/// Splits a transitive set x into antichains of the order
/// v_i < v_j  iff  i < j and v_j -> v_i, using longest-chain levels. Each
/// class is stable in the backedge graph; the class count equals the clique
/// number of the backedge graph on x.
inline std::vector<VertexSet> dilworth_partition(const OrderedTournament& ot, VertexSet x) {
    if (!is_transitive(ot.t, x)) throw std::invalid_argument("dilworth_partition: set is not transitive");
    std::vector<int> level(ot.size(), 0);
    std::vector<VertexSet> classes;
    for (int i = 0; i < ot.size(); ++i) {
        const int v = ot.order.at(i);
        if (!x.contains(v)) continue;
        int h = 0;
        // Earlier members of x that v beats lie below v in the order.
        for (int u : ot.t.out(v) & x)
            if (ot.order.position(u) < i) h = std::max(h, level[u] + 1);
        level[v] = h;
        if (h >= static_cast<int>(classes.size())) classes.resize(h + 1);
        classes[h].insert(v);
    }
    return classes;
}

} // namespace tourlab
