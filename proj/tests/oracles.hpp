#pragma once

// Brute-force reference implementations. They share only the Tournament
// container with the library and use no library algorithm.

#include "tourlab/tournament.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using tourlab::Tournament;
using tourlab::VertexSet;

/// No cyclic triangle among the listed vertices.
inline bool acyclic(const Tournament& t, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (std::size_t k = j + 1; k < vs.size(); ++k) {
                const int a = vs[i], b = vs[j], c = vs[k];
                if ((t.edge(a, b) && t.edge(b, c) && t.edge(c, a)) || (t.edge(b, a) && t.edge(c, b) && t.edge(a, c)))
                    return false;
            }
    return true;
}

inline std::vector<int> members(VertexSet s) {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
        if (s.bits() >> v & 1u) out.push_back(v);
    return out;
}

/// chi by trying every set partition (restricted growth strings); n <= 9.
inline int chi_partitions(const Tournament& t, VertexSet s) {
    const std::vector<int> vs = members(s);
    const int m = static_cast<int>(vs.size());
    if (m == 0) return 0;
    int best = m;
    std::vector<int> block(m, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (blocks >= best) return;
        if (i == m) {
            std::vector<std::vector<int>> parts(blocks);
            for (int j = 0; j < m; ++j) parts[block[j]].push_back(vs[j]);
            for (const auto& p : parts)
                if (!acyclic(t, p)) return;
            best = blocks;
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return best;
}

/// Can the vertices be split into k classes with no cyclic triangle inside
/// a class? Plain depth-first assignment with class-opening symmetry break.
inline bool k_colourable(const Tournament& t, int k) {
    const int n = t.size();
    std::vector<std::vector<int>> cls(k);
    std::function<bool(int, int)> rec = [&](int v, int opened) {
        if (v == n) return true;
        for (int c = 0; c < std::min(k, opened + 1); ++c) {
            bool ok = true;
            for (std::size_t i = 0; i < cls[c].size() && ok; ++i)
                for (std::size_t j = i + 1; j < cls[c].size() && ok; ++j) {
                    const int a = cls[c][i], b = cls[c][j];
                    if ((t.edge(a, b) && t.edge(b, v) && t.edge(v, a)) || (t.edge(b, a) && t.edge(v, b) && t.edge(a, v)))
                        ok = false;
                }
            if (!ok) continue;
            cls[c].push_back(v);
            if (rec(v + 1, std::max(opened, c + 1))) return true;
            cls[c].pop_back();
        }
        return false;
    };
    return rec(0, 0);
}

inline bool dominating(const Tournament& t, const std::vector<int>& x) {
    for (int v = 0; v < t.size(); ++v) {
        bool hit = std::find(x.begin(), x.end(), v) != x.end();
        for (int u : x) hit = hit || t.edge(u, v);
        if (!hit) return false;
    }
    return true;
}

/// Smallest dominating set size by increasing-size subset enumeration.
inline int dom(const Tournament& t) {
    const int n = t.size();
    for (int k = 0; k <= n; ++k) {
        std::vector<int> pick(k);
        std::function<bool(int, int)> rec = [&](int i, int from) {
            if (i == k) return dominating(t, pick);
            for (int v = from; v < n; ++v) {
                pick[i] = v;
                if (rec(i + 1, v + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
    return n;
}

/// Smallest X ⊆ V such that every vertex of a outside X has an in-neighbour in X.
inline int edom(const Tournament& t, VertexSet a) {
    const int n = t.size();
    const std::uint64_t total = std::uint64_t{1} << n;
    int best = n;
    for (std::uint64_t x = 0; x < total; ++x) {
        const int size = __builtin_popcountll(x);
        if (size >= best) continue;
        bool ok = true;
        for (int v : members(a)) {
            if (x >> v & 1u) continue;
            bool hit = false;
            for (int u = 0; u < n && !hit; ++u) hit = (x >> u & 1u) && t.edge(u, v);
            if (!hit) {
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

/// chi of every subset, from chi_partitions; n <= 8.
inline std::vector<int> chi_table(const Tournament& t) {
    std::vector<int> out(std::size_t{1} << t.size());
    for (std::uint64_t m = 0; m < out.size(); ++m) out[m] = chi_partitions(t, VertexSet{m});
    return out;
}

inline bool complete(const Tournament& t, const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
        for (int y : b)
            if (!t.edge(x, y)) return false;
    return true;
}

/// max over all (a, b, P, Q) with a => P => b => Q => a, P, Q non-empty, of
/// min(chi P, chi Q); 0 when there is none. Every other vertex is assigned
/// to P, Q or neither.
inline int max_diamond(const Tournament& t) {
    const int n = t.size();
    const auto chi = chi_table(t);
    int best = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (v != a && v != b) rest.push_back(v);
            std::vector<int> assign(rest.size(), 0);
            for (;;) {
                std::vector<int> p, q;
                std::uint64_t pm = 0, qm = 0;
                for (std::size_t i = 0; i < rest.size(); ++i) {
                    if (assign[i] == 1) { p.push_back(rest[i]); pm |= std::uint64_t{1} << rest[i]; }
                    if (assign[i] == 2) { q.push_back(rest[i]); qm |= std::uint64_t{1} << rest[i]; }
                }
                if (!p.empty() && !q.empty() && complete(t, {a}, p) && complete(t, p, {b}) && complete(t, {b}, q) &&
                    complete(t, q, {a}))
                    best = std::max(best, std::min(chi[pm], chi[qm]));
                std::size_t i = 0;
                while (i < assign.size() && assign[i] == 2) assign[i++] = 0;
                if (i == assign.size()) break;
                ++assign[i];
            }
        }
    return best;
}

/// max over all disjoint non-empty (A, B) with A => B of min(chi A, chi B).
inline int best_complete_pair(const Tournament& t) {
    const int n = t.size();
    const auto chi = chi_table(t);
    int best = 0;
    std::vector<int> assign(n, 0);
    for (;;) {
        std::vector<int> a, b;
        std::uint64_t am = 0, bm = 0;
        for (int v = 0; v < n; ++v) {
            if (assign[v] == 1) { a.push_back(v); am |= std::uint64_t{1} << v; }
            if (assign[v] == 2) { b.push_back(v); bm |= std::uint64_t{1} << v; }
        }
        if (!a.empty() && !b.empty() && complete(t, a, b)) best = std::max(best, std::min(chi[am], chi[bm]));
        int i = 0;
        while (i < n && assign[i] == 2) assign[i++] = 0;
        if (i == n) break;
        ++assign[i];
    }
    return best;
}

/// Lower-triangle string under an explicit vertex order.
inline std::vector<bool> row_string(const Tournament& t, const std::vector<int>& order) {
    std::vector<bool> s;
    for (std::size_t i = 1; i < order.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) s.push_back(t.edge(order[i], order[j]));
    return s;
}

/// Minimum string over all n! orders, no pruning.
inline std::vector<bool> canonical_string(const Tournament& t) {
    std::vector<int> p(t.size());
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> best = row_string(t, p);
    while (std::next_permutation(p.begin(), p.end())) best = std::min(best, row_string(t, p));
    return best;
}

/// Number of isomorphism classes on n vertices: every labelled tournament,
/// bucketed by canonical_string.
inline std::size_t class_count(int n) {
    const int m = n * (n - 1) / 2;
    std::set<std::vector<bool>> seen;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        int k = 0;
        std::vector<std::vector<bool>> beats(n, std::vector<bool>(n, false));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const bool uv = bits >> k++ & 1u;
                beats[u][v] = uv;
                beats[v][u] = !uv;
            }
        seen.insert(canonical_string(Tournament::from_predicate(n, [&](int u, int v) { return beats[u][v]; })));
    }
    return seen.size();
}

/// Local chromatic number straight from the definition, chi by partitions.
inline int local_chromatic(const Tournament& t, const std::vector<int>& order) {
    const int n = t.size();
    int best = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t m = 0;
        for (int j = 0; j < n; ++j) {
            if (j < i && t.edge(order[i], order[j])) m |= std::uint64_t{1} << order[j];
            if (j > i && t.edge(order[j], order[i])) m |= std::uint64_t{1} << order[j];
        }
        best = std::max(best, chi_partitions(t, VertexSet{m}));
    }
    return best;
}

/// Graph chromatic number by trying k = 0, 1, ... colours; n <= 12.
inline int graph_chi(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    for (int k = 0; k <= n; ++k) {
        std::vector<int> col(n, -1);
        std::function<bool(int)> rec = [&](int v) {
            if (v == n) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u) ok = !(adj[u][v] && col[u] == c);
                if (!ok) continue;
                col[v] = c;
                if (rec(v + 1)) return true;
            }
            col[v] = -1;
            return false;
        };
        if (rec(0)) return k;
    }
    return n;
}

/// Largest clique by subset enumeration; n <= 16.
inline int graph_omega(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const int size = __builtin_popcountll(m);
        if (size <= best) continue;
        bool clique = true;
        for (int u = 0; u < n && clique; ++u)
            for (int v = u + 1; v < n && clique; ++v)
                if ((m >> u & 1u) && (m >> v & 1u) && !adj[u][v]) clique = false;
        if (clique) best = size;
    }
    return best;
}

} // namespace oracle
