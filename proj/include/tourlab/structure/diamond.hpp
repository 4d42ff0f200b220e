#pragma once

#include "tourlab/chromatic.hpp"
#include "tourlab/tournament.hpp"

#include <algorithm>
#include <optional>

namespace tourlab {

/// a => p => b => q => a with p, q non-empty, disjoint and avoiding a, b.
/// chromatic = min(chi(p), chi(q)).
struct Diamond {
    int a = 0;
    int b = 0;
    VertexSet p;
    VertexSet q;
    int chromatic = 0;
};

inline bool is_diamond(const Tournament& t, int a, int b, VertexSet p, VertexSet q) {
    if (a == b || p.empty() || q.empty() || !p.disjoint(q)) return false;
    const VertexSet ab = VertexSet::of({a, b});
    if (p.intersects(ab) || q.intersects(ab)) return false;
    const VertexSet A = VertexSet::single(a), B = VertexSet::single(b);
    return complete_to(t, A, p) && complete_to(t, p, B) && complete_to(t, B, q) && complete_to(t, q, A);
}

inline bool is_diamond(const Tournament& t, const Diamond& d) { return is_diamond(t, d.a, d.b, d.p, d.q); }

inline constexpr int kDiamondExactMax = 15;

/// Diamond of maximum chromatic number. For fixed (a, b) the largest choice
/// is P = N+(a) ∩ N-(b), Q = N-(a) ∩ N+(b), so only ordered pairs are
/// scanned. Ties go to the first (a, b) in index order.
inline std::optional<Diamond> max_diamond(const Tournament& t) {
    if (t.size() > kDiamondExactMax) throw CapacityError("max_diamond: exact mode limited to n <= 15");
    const ChiTable table(t);
    std::optional<Diamond> best;
    for (int a = 0; a < t.size(); ++a)
        for (int b = 0; b < t.size(); ++b) {
            if (a == b) continue;
            const VertexSet p = t.out(a) & t.in(b), q = t.in(a) & t.out(b);
            if (p.empty() || q.empty()) continue;
            const int c = std::min(table(p), table(q));
            if (!best || c > best->chromatic) best = Diamond{a, b, p, q, c};
        }
    return best;
}

} // namespace tourlab
