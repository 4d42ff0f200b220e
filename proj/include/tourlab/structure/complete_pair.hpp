#pragma once

#include "tourlab/chromatic.hpp"
#include "tourlab/tournament.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace tourlab {

/// (a, b) disjoint with a => b; quality = min(chi(a), chi(b)).
struct CompletePair {
    VertexSet a;
    VertexSet b;
    int quality = 0;
    bool exact = true;  // false when found by the large-n heuristic
};

inline constexpr int kCompletePairExactMax = 15;

/// Best complete pair. Exact for n <= 15: b ranges over all subsets and a is
/// the set of all vertices complete to b, which is optimal for that b since
/// chi is monotone. For larger n a heuristic over neighbourhood-shaped
/// candidates is used and the result is flagged inexact.
inline CompletePair best_complete_pair(const Tournament& t, bool allow_heuristic = false) {
    CompletePair best;
    if (t.size() <= kCompletePairExactMax) {
        const ChiTable table(t);
        for_each_subset(t.vertices(), [&](VertexSet b) {
            if (b.empty()) return;
            const VertexSet a = complete_to_set(t, b);
            const int q = std::min(table(a), table(b));
            if (q > best.quality) best = {a, b, q, true};
        });
        return best;
    }
    if (!allow_heuristic) throw CapacityError("best_complete_pair: exact mode limited to n <= 15");
    best.exact = false;
    ChiOracle oracle(t);
    auto consider = [&](VertexSet b) {
        if (b.empty()) return;
        const VertexSet a = complete_to_set(t, b);
        if (a.empty()) return;
        const int q = std::min(oracle(a), oracle(b));
        if (q > best.quality) best = {a, b, q, false};
    };
    for (int v = 0; v < t.size(); ++v) {
        consider(VertexSet::single(v));
        consider(t.out(v));
        for (int u : t.out(v)) consider(t.out(v) & t.out(u));
    }
    return best;
}

/// Has a complete pair with both sides of chromatic number at least c.
inline bool c_good(const Tournament& t, int c, bool allow_heuristic = false) {
    if (c <= 0) return true;
    return best_complete_pair(t, allow_heuristic).quality >= c;
}

/// Lowest-index vertex with chi(N+(v)) >= c and chi(N-(v)) >= c.
inline std::optional<int> inout_witness(const Tournament& t, int c) {
    for (int v = 0; v < t.size(); ++v)
        if (chi(t, t.out(v)) >= c && chi(t, t.in(v)) >= c) return v;
    return std::nullopt;
}

} // namespace tourlab
