#pragma once

#include "tourlab/errors.hpp"
#include "tourlab/vertex_set.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tourlab {

inline void check_capacity(int n, const char* what) {
    if (n < 0 || n > kMaxVertices)
        throw CapacityError(std::string(what) + ": vertex count " + std::to_string(n) + " outside [0, 64]");
}

/// A complete orientation of K_n, stored as per-vertex out-neighbour sets.
/// Instances are immutable once built and always satisfy the tournament
/// invariants (irreflexive, exactly one direction per pair).
class Tournament {
public:
    /// The empty tournament.
    Tournament() = default;

    /// Builds the tournament on n vertices where, for u < v, u -> v iff
    /// beats(u, v).
    template <typename Pred>
    static Tournament from_predicate(int n, Pred&& beats) {
        check_capacity(n, "tournament");
        Tournament t;
        t.n_ = n;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (beats(u, v))
                    t.out_[u].insert(v);
                else
                    t.out_[v].insert(u);
            }
        return t;
    }

    /// Validating constructor from explicit out-sets.
    static Tournament from_out_sets(std::span<const VertexSet> out) {
        const int n = static_cast<int>(out.size());
        check_capacity(n, "tournament");
        const VertexSet all = VertexSet::range(n);
        Tournament t;
        t.n_ = n;
        for (int v = 0; v < n; ++v) {
            if (!out[v].subset_of(all)) throw std::invalid_argument("out-set of vertex " + std::to_string(v) + " leaves the vertex range");
            if (out[v].contains(v)) throw std::invalid_argument("loop at vertex " + std::to_string(v));
            t.out_[v] = out[v];
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (out[u].contains(v) == out[v].contains(u))
                    throw std::invalid_argument("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is not oriented exactly once");
        return t;
    }

    /// Transitive tournament with 0 -> 1 -> ... -> n-1 (i -> j for i < j).
    static Tournament transitive(int n) {
        return from_predicate(n, [](int, int) { return true; });
    }

    int size() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    bool edge(int u, int v) const { return out_[u].contains(v); }
    VertexSet out(int v) const { return out_[v]; }
    VertexSet in(int v) const { return vertices() - out_[v] - VertexSet::single(v); }
    VertexSet closed_out(int v) const { return out_[v].with(v); }
    VertexSet closed_in(int v) const { return in(v).with(v); }
    int out_degree(int v) const { return out_[v].size(); }

    std::vector<VertexSet> out_sets() const { return {out_.begin(), out_.begin() + n_}; }

    friend bool operator==(const Tournament& a, const Tournament& b) {
        return a.n_ == b.n_ && std::equal(a.out_.begin(), a.out_.begin() + a.n_, b.out_.begin());
    }

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> out_{};
};

/// A linear order of the vertices: perm[0] is first.
class Numbering {
public:
    Numbering() = default;
    explicit Numbering(std::vector<int> perm) : perm_(std::move(perm)) {
        check_capacity(static_cast<int>(perm_.size()), "numbering");
        pos_.assign(perm_.size(), -1);
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            const int v = perm_[i];
            if (v < 0 || v >= static_cast<int>(perm_.size()) || pos_[v] != -1)
                throw std::invalid_argument("numbering is not a permutation");
            pos_[v] = static_cast<int>(i);
        }
    }

    static Numbering identity(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        return Numbering{std::move(p)};
    }
    static Numbering reversed(int n) {
        std::vector<int> p(n);
        std::iota(p.rbegin(), p.rend(), 0);
        return Numbering{std::move(p)};
    }

    int size() const { return static_cast<int>(perm_.size()); }
    /// Vertex at position i.
    int at(int i) const { return perm_[i]; }
    /// Position of vertex v.
    int position(int v) const { return pos_[v]; }
    const std::vector<int>& perm() const { return perm_; }

    friend bool operator==(const Numbering& a, const Numbering& b) { return a.perm_ == b.perm_; }

private:
    std::vector<int> perm_;
    std::vector<int> pos_;
};

/// A tournament paired with a numbering of its vertices.
struct OrderedTournament {
    Tournament t;
    Numbering order;

    OrderedTournament(Tournament tt, Numbering nb) : t(std::move(tt)), order(std::move(nb)) {
        if (t.size() != order.size()) throw std::invalid_argument("numbering size does not match tournament");
    }
    int size() const { return t.size(); }
    /// Is the edge between positions i and j directed from position i?
    bool forward(int i, int j) const { return t.edge(order.at(i), order.at(j)); }
};

/// Simple undirected graph on at most 64 vertices.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) { check_capacity(n, "graph"); }

    template <typename Pred>
    static Graph from_predicate(int n, Pred&& adjacent) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adjacent(u, v)) g.add_edge(u, v);
        return g;
    }
    static Graph complete(int n) {
        return from_predicate(n, [](int, int) { return true; });
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("graph loops are not allowed");
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    int size() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    VertexSet neighbours(int v) const { return adj_[v]; }
    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += adj_[v].size();
        return m / 2;
    }
    bool is_stable(VertexSet s) const {
        for (int v : s)
            if (adj_[v].intersects(s)) return false;
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
    }

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// ---------------------------------------------------------------------------
// Elementary operations
// ---------------------------------------------------------------------------

/// Result of taking a subtournament: map[i] is the original index of new
/// vertex i, in ascending order.
struct Induced {
    Tournament t;
    std::vector<int> map;
};

inline Induced induce(const Tournament& t, VertexSet s) {
    if (!s.subset_of(t.vertices())) throw std::invalid_argument("induce: set leaves the vertex range");
    std::vector<int> map = s.to_vector();
    Tournament sub = Tournament::from_predicate(static_cast<int>(map.size()),
                                                [&](int i, int j) { return t.edge(map[i], map[j]); });
    return {std::move(sub), std::move(map)};
}

inline Tournament reverse(const Tournament& t) {
    return Tournament::from_predicate(t.size(), [&](int u, int v) { return t.edge(v, u); });
}

/// True iff the subtournament on s has no cyclic triangle, i.e. its
/// out-degrees inside s are pairwise distinct.
inline bool is_transitive(const Tournament& t, VertexSet s) {
    std::uint64_t seen = 0;
    for (int v : s) {
        const int d = (t.out(v) & s).size();
        if ((seen >> d) & 1u) return false;
        seen |= std::uint64_t{1} << d;
    }
    return true;
}

inline bool is_transitive(const Tournament& t) { return is_transitive(t, t.vertices()); }

/// Does adding x to the transitive set s keep it transitive?
inline bool extends_transitive(const Tournament& t, VertexSet s, int x) {
    const VertexSet ahead = t.out(x) & s;
    const VertexSet behind = s - ahead;
    for (int a : ahead)
        if (t.out(a).intersects(behind)) return false;
    return true;
}

/// a => b: every edge between a and b is directed from a to b.
inline bool complete_to(const Tournament& t, VertexSet a, VertexSet b) {
    if (!a.disjoint(b)) throw std::invalid_argument("complete_to: sets are not disjoint");
    for (int v : b)
        if (t.out(v).intersects(a)) return false;
    return true;
}

/// Vertices outside s that are complete to s (they beat all of s).
inline VertexSet complete_to_set(const Tournament& t, VertexSet s) {
    VertexSet r = t.vertices() - s;
    for (int v : s) r &= t.in(v);
    return r;
}

/// Vertices outside s that are complete from s.
inline VertexSet complete_from_set(const Tournament& t, VertexSet s) {
    VertexSet r = t.vertices() - s;
    for (int v : s) r &= t.out(v);
    return r;
}

/// All vertex sets of cyclic triangles inside s.
inline std::vector<VertexSet> cyclic_triangles(const Tournament& t, VertexSet s) {
    std::vector<VertexSet> out;
    for (int a : s)
        for (int b : t.out(a) & s)
            if (b > a)
                for (int c : t.out(b) & t.in(a) & s)
                    if (c > a) out.push_back(VertexSet::of({a, b, c}));
    std::sort(out.begin(), out.end());
    return out;
}

/// Backedge graph: for positions i < j, {v_i, v_j} is an edge iff v_j -> v_i.
/// Vertices keep their tournament labels.
inline Graph backedge_graph(const OrderedTournament& ot) {
    const int n = ot.size();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!ot.forward(i, j)) g.add_edge(ot.order.at(i), ot.order.at(j));
    return g;
}

/// Inverse of backedge_graph.
inline OrderedTournament tournament_from_backedge(const Graph& g, const Numbering& nb) {
    if (g.size() != nb.size()) throw std::invalid_argument("numbering size does not match graph");
    Tournament t = Tournament::from_predicate(g.size(), [&](int u, int v) {
        const bool u_first = nb.position(u) < nb.position(v);
        return u_first != g.adjacent(u, v);
    });
    return {std::move(t), nb};
}

/// Substitutes parts[i] for vertex i. Vertices of part i occupy a contiguous
/// block, blocks in vertex order.
inline Tournament blowup(const Tournament& t, std::span<const Tournament> parts) {
    if (static_cast<int>(parts.size()) != t.size()) throw std::invalid_argument("blowup: need one part per vertex");
    int total = 0;
    for (const auto& p : parts) total += p.size();
    check_capacity(total, "blowup");
    std::vector<int> block, local;
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < parts[i].size(); ++j) {
            block.push_back(i);
            local.push_back(j);
        }
    return Tournament::from_predicate(total, [&](int u, int v) {
        if (block[u] == block[v]) return parts[block[u]].edge(local[u], local[v]);
        return t.edge(block[u], block[v]);
    });
}

/// Vertex ranges of the blocks produced by blowup / delta style constructions.
inline std::vector<VertexSet> block_sets(std::span<const int> sizes) {
    std::vector<VertexSet> out;
    int start = 0;
    for (int s : sizes) {
        out.push_back(VertexSet{VertexSet::range(start + s).bits() & ~VertexSet::range(start).bits()});
        start += s;
    }
    return out;
}

/// Relabels t so that new vertex i is old vertex perm[i].
inline Tournament relabel(const Tournament& t, std::span<const int> perm) {
    return Tournament::from_predicate(t.size(), [&](int i, int j) { return t.edge(perm[i], perm[j]); });
}

} // namespace tourlab
