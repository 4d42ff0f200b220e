#pragma once

#include "tourlab/chromatic.hpp"
#include "tourlab/graph_solvers.hpp"
#include "tourlab/structure/diamond.hpp"
#include "tourlab/tournament.hpp"

#include <algorithm>
#include <variant>
#include <vector>

namespace tourlab {

/// Vertices whose edge with v points right to left: earlier vertices that v
/// beats and later vertices that beat v. Equals v's backedge-graph
/// neighbourhood.
inline VertexSet local_set(const OrderedTournament& ot, int v) {
    const int pv = ot.order.position(v);
    VertexSet s;
    for (int u : ot.t.out(v))
        if (ot.order.position(u) < pv) s.insert(u);
    for (int u : ot.t.in(v))
        if (ot.order.position(u) > pv) s.insert(u);
    return s;
}

inline std::vector<VertexSet> local_sets(const OrderedTournament& ot) {
    std::vector<VertexSet> out(ot.size());
    for (int v = 0; v < ot.size(); ++v) out[v] = local_set(ot, v);
    return out;
}

/// max over v of chi(local_set(v)).
inline int local_chromatic_number(const OrderedTournament& ot) {
    int best = 0;
    ChiOracle oracle(ot.t, 0);
    for (int v = 0; v < ot.size(); ++v) best = std::max(best, oracle(local_set(ot, v)));
    return best;
}

/// max over v of the graph chromatic number of the backedge graph on v's
/// backedge neighbourhood.
inline int strong_chromatic_number(const OrderedTournament& ot) {
    const Graph g = backedge_graph(ot);
    int best = 0;
    for (int v = 0; v < ot.size(); ++v) best = std::max(best, graph_chi(g, g.neighbours(v)));
    return best;
}

/// Clique number of the backedge graph.
inline int numbering_clique(const OrderedTournament& ot) { return graph_omega(backedge_graph(ot)); }

struct LocalNumbering {
    Numbering order;
    int value = 0;
    bool exact = true;
};

inline constexpr int kMinLocalExactMax = 9;

namespace detail {

inline int local_value(const Tournament& t, const Numbering& nb, const ChiTable& table) {
    int best = 0;
    const OrderedTournament ot{t, nb};
    for (int v = 0; v < t.size(); ++v) best = std::max(best, table(local_set(ot, v)));
    return best;
}

} // namespace detail

/// Diamond-free construction: H has a -> b iff chi(N+(a) ∩ N-(b)) >= 2c+2.
/// Acyclic H yields a topological numbering (smallest available index
/// first). Otherwise a diamond of chromatic number > c is read off a
/// directed cycle of H.
inline std::variant<Numbering, Diamond> diamond_free_numbering(const Tournament& t, int c) {
    if (c < 0) throw std::invalid_argument("diamond_free_numbering: c must be non-negative");
    const int n = t.size();
    ChiOracle oracle(t, 12);
    std::vector<VertexSet> h_out(n), h_in(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const VertexSet mid = t.out(a) & t.in(b);
            if (mid.size() >= 2 * c + 2 && oracle(mid) >= 2 * c + 2) {
                h_out[a].insert(b);
                h_in[b].insert(a);
            }
        }
    std::vector<int> order;
    VertexSet left = t.vertices();
    while (!left.empty()) {
        VertexSet ready;
        for (int v : left)
            if (h_in[v].disjoint(left)) ready.insert(v);
        if (ready.empty()) break;
        const int v = ready.min();
        order.push_back(v);
        left.erase(v);
    }
    if (left.empty()) return Numbering{std::move(order)};

    // Every remaining vertex has an H-predecessor among the remaining ones;
    // walking predecessors must revisit a vertex.
    std::vector<int> walk{left.min()};
    std::vector<int> seen_at(n, -1);
    seen_at[walk[0]] = 0;
    for (;;) {
        const int pred = (h_in[walk.back()] & left).min();
        if (seen_at[pred] >= 0) {
            walk.erase(walk.begin(), walk.begin() + seen_at[pred]);
            break;
        }
        seen_at[pred] = static_cast<int>(walk.size());
        walk.push_back(pred);
    }
    std::vector<int> cyc(walk.rbegin(), walk.rend());  // cyc[i] -> cyc[i+1] in H
    const int k = static_cast<int>(cyc.size());
    const int v1 = cyc[0];
    auto a_set = [&](int i) { return t.out(cyc[i]) & t.in(cyc[(i + 1) % k]); };
    for (int i = 0; i + 1 < k; ++i) {
        const VertexSet b_i = a_set(i) & t.out(v1);
        const VertexSet c_next = a_set(i + 1) & t.in(v1);
        const int cb = oracle(b_i), cc = oracle(c_next);
        if (cb > c && cc > c) return Diamond{v1, cyc[i + 1], b_i, c_next, std::min(cb, cc)};
    }
    throw std::logic_error("diamond_free_numbering: H-cycle without a diamond");
}

/// Numbering of minimum local chromatic number. Exact branch and bound over
/// prefixes for n <= 9; for larger n (allow_heuristic) the best of the
/// identity and the diamond-free numberings for c = 0, 1, ...
inline LocalNumbering min_local_numbering(const Tournament& t, bool allow_heuristic = false,
                                          const Deadline& deadline = Deadline::none()) {
    const int n = t.size();
    if (n > kMinLocalExactMax) {
        if (!allow_heuristic) throw CapacityError("min_local_numbering: exact mode limited to n <= 9");
        LocalNumbering best{Numbering::identity(n), local_chromatic_number({t, Numbering::identity(n)}), false};
        for (int c = 0; c <= n; ++c) {
            deadline.check();
            auto r = diamond_free_numbering(t, c);
            if (auto* nb = std::get_if<Numbering>(&r)) {
                const int v = local_chromatic_number({t, *nb});
                if (v < best.value) best = {*nb, v, false};
                break;
            }
        }
        return best;
    }
    const ChiTable table(t);
    LocalNumbering best{Numbering::identity(n), detail::local_value(t, Numbering::identity(n), table), true};
    if (best.value == 0) return best;

    // Placed vertices have final backward parts; partial[u] grows as later
    // vertices beating u are placed. For unplaced w, placed ∩ N+(w) is a
    // lower bound on its eventual local set.
    std::vector<int> prefix;
    std::vector<VertexSet> partial(n);
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, VertexSet placed, int committed) -> void {
        deadline.poll(++nodes);
        if (static_cast<int>(prefix.size()) == n) {
            if (committed < best.value) best = {Numbering{prefix}, committed, true};
            return;
        }
        for (int w : t.vertices() - placed) {
            const VertexSet back = placed & t.out(w);
            int bound = std::max(committed, table(back));
            if (bound >= best.value) continue;
            const VertexSet now = placed.with(w);
            for (int u : placed & t.out(w)) {
                partial[u].insert(w);
                bound = std::max(bound, table(partial[u]));
            }
            partial[w] = back;
            for (int x : t.vertices() - now) {
                if (bound >= best.value) break;
                bound = std::max(bound, table(now & t.out(x)));
            }
            if (bound < best.value) {
                prefix.push_back(w);
                self(self, now, bound);
                prefix.pop_back();
            }
            for (int u : placed & t.out(w)) partial[u].erase(w);
            partial[w] = VertexSet{};
            if (best.value == 0) return;
        }
    };
    rec(rec, VertexSet{}, 0);
    return best;
}

} // namespace tourlab
