#pragma once

#include "tourlab/tournament.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace tourlab {

namespace detail {

struct ContainsSearch {
    const Tournament& g;
    const Tournament& h;
    std::vector<int> order;      // h-vertices in matching order
    std::vector<int> map;        // h-vertex -> g-vertex
    VertexSet used;
    std::vector<VertexSet> deg_ok;  // g-vertices degree-compatible with each h-vertex

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const int x = order[depth];
        VertexSet cand = deg_ok[x] - used;
        for (std::size_t k = 0; k < depth && !cand.empty(); ++k) {
            const int y = order[k];
            cand &= h.edge(x, y) ? g.in(map[y]) : g.out(map[y]);
        }
        for (int v : cand) {
            map[x] = v;
            used.insert(v);
            if (extend(depth + 1)) return true;
            used.erase(v);
        }
        return false;
    }
};

} // namespace detail

/// Finds an injective map V(h) -> V(g) under which g induces h, or nullopt if
/// g is h-free. map[x] is the image of h-vertex x.
inline std::optional<std::vector<int>> contains(const Tournament& g, const Tournament& h) {
    const int hn = h.size();
    if (hn > g.size()) return std::nullopt;
    if (hn == 0) return std::vector<int>{};

    detail::ContainsSearch s{g, h, {}, std::vector<int>(hn, -1), {}, std::vector<VertexSet>(hn)};
    for (int x = 0; x < hn; ++x) {
        const int dout = h.out_degree(x), din = hn - 1 - dout;
        for (int v = 0; v < g.size(); ++v)
            if (g.out_degree(v) >= dout && g.size() - 1 - g.out_degree(v) >= din) s.deg_ok[x].insert(v);
        if (s.deg_ok[x].empty()) return std::nullopt;
    }
    // Most constrained pattern vertices first; each later vertex is adjacent to
    // every earlier one, so the order only affects how early candidates shrink.
    s.order.resize(hn);
    for (int x = 0; x < hn; ++x) s.order[x] = x;
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return s.deg_ok[a].size() < s.deg_ok[b].size(); });
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

/// Whole-tournament isomorphism, via contains with equal sizes. Returns the
/// map from a's vertices to b's.
inline std::optional<std::vector<int>> isomorphism(const Tournament& a, const Tournament& b) {
    if (a.size() != b.size()) return std::nullopt;
    return contains(b, a);
}

/// Checks that `map` embeds h into g as an induced subtournament.
inline bool is_embedding(const Tournament& g, const Tournament& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != h.size()) return false;
    VertexSet img;
    for (int v : map) {
        if (v < 0 || v >= g.size() || img.contains(v)) return false;
        img.insert(v);
    }
    for (int x = 0; x < h.size(); ++x)
        for (int y = 0; y < h.size(); ++y)
            if (x != y && h.edge(x, y) != g.edge(map[x], map[y])) return false;
    return true;
}

} // namespace tourlab
