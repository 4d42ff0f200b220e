#pragma once

#include "tourlab/errors.hpp"
#include "tourlab/tournament.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace tourlab {

struct DomResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Smallest X ⊆ pool with target ⊆ ∪_{x ∈ X} (N+(x) ∩ scope) ∪ X.
/// Branching rule: the least undominated target vertex u must be covered by
/// some x ∈ pool ∩ N-[u]; candidates tried by decreasing coverage, ties by
/// index. Starts from a greedy upper bound.
struct CoverSearch {
    const Tournament& t;
    VertexSet pool;
    VertexSet scope;
    const Deadline& deadline;
    std::uint64_t nodes = 0;
    int best = 0;
    VertexSet best_set{};

    VertexSet cover(int x) const { return (t.out(x) & scope).with(x); }

    void greedy(VertexSet target) {
        VertexSet chosen, left = target;
        while (!left.empty()) {
            int pick = -1, gain = -1;
            for (int x : pool) {
                const int g = (cover(x) & left).size();
                if (g > gain) {
                    gain = g;
                    pick = x;
                }
            }
            chosen.insert(pick);
            left -= cover(pick);
        }
        best = chosen.size();
        best_set = chosen;
    }

    void search(VertexSet left, VertexSet chosen) {
        deadline.poll(++nodes);
        if (left.empty()) {
            if (chosen.size() < best) {
                best = chosen.size();
                best_set = chosen;
            }
            return;
        }
        if (chosen.size() + 1 >= best) return;
        // Lower bound: every pick covers at most maxgain of what is left.
        int maxgain = 0;
        for (int x : pool) maxgain = std::max(maxgain, (cover(x) & left).size());
        if (maxgain == 0) return;
        if (chosen.size() + (left.size() + maxgain - 1) / maxgain >= best) return;

        const int u = left.min();
        std::vector<std::pair<int, int>> cands;  // (-gain, x)
        for (int x : pool)
            if (cover(x).contains(u)) cands.emplace_back(-(cover(x) & left).size(), x);
        std::sort(cands.begin(), cands.end());
        for (const auto& [neg, x] : cands) search(left - cover(x), chosen.with(x));
    }
};

inline DomResult cover_solve(const Tournament& t, VertexSet target, VertexSet pool, VertexSet scope,
                             const Deadline& deadline) {
    DomResult r;
    if (target.empty()) return r;
    CoverSearch s{t, pool, scope, deadline};
    s.greedy(target);
    s.search(target, VertexSet{});
    r.value = s.best;
    r.witness = s.best_set;
    r.nodes = s.nodes;
    return r;
}

} // namespace detail

/// Domination number: smallest X with every vertex outside X adjacent from X.
inline DomResult dom_solve(const Tournament& t, const Deadline& deadline = Deadline::none()) {
    return detail::cover_solve(t, t.vertices(), t.vertices(), t.vertices(), deadline);
}
inline int dom(const Tournament& t) { return dom_solve(t).value; }

/// Domination number of the subtournament induced on s (without relabelling).
inline DomResult dom_within(const Tournament& t, VertexSet s, const Deadline& deadline = Deadline::none()) {
    return detail::cover_solve(t, s, s, s, deadline);
}

/// External domination number of a: X ranges over all of V(t).
inline DomResult edom_solve(const Tournament& t, VertexSet a, const Deadline& deadline = Deadline::none()) {
    if (!a.subset_of(t.vertices())) throw std::invalid_argument("edom: set leaves the vertex range");
    return detail::cover_solve(t, a, t.vertices(), t.vertices(), deadline);
}
inline int edom(const Tournament& t, VertexSet a) { return edom_solve(t, a).value; }

/// Is x a dominating set of t?
inline bool dominates(const Tournament& t, VertexSet x) {
    VertexSet covered = x;
    for (int v : x) covered |= t.out(v);
    return covered == t.vertices();
}

struct SubdomResult {
    int value = 0;
    VertexSet witness;  // subset achieving the value
    bool exact = true;  // false: sampled lower bound
};

inline constexpr int kSubdomExactMax = 20;

/// Maximum domination number over all subtournaments. Exact for n <= 20;
/// beyond that a lower bound from the whole tournament, every vertex
/// neighbourhood and `samples` random subsets (flagged inexact).
inline SubdomResult subdom(const Tournament& t, const Deadline& deadline = Deadline::none(), int samples = 20000,
                           std::uint64_t seed = 1) {
    SubdomResult r;
    auto consider = [&](VertexSet s) {
        if (s.size() <= r.value) return;  // dom(S) <= |S|
        const int d = dom_within(t, s, deadline).value;
        if (d > r.value) {
            r.value = d;
            r.witness = s;
        }
    };
    if (t.size() <= kSubdomExactMax) {
        // Largest subsets first so the |S| bound prunes more.
        std::vector<std::uint64_t> masks;
        for_each_subset(t.vertices(), [&](VertexSet s) { masks.push_back(s.bits()); });
        std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
            return std::popcount(a) > std::popcount(b);
        });
        std::uint64_t k = 0;
        for (std::uint64_t m : masks) {
            deadline.poll(++k);
            consider(VertexSet{m});
        }
        return r;
    }
    r.exact = false;
    consider(t.vertices());
    for (int v = 0; v < t.size(); ++v) {
        consider(t.out(v));
        consider(t.in(v));
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) consider(VertexSet{rng()} & t.vertices());
    return r;
}

} // namespace tourlab
