#pragma once

#include "tourlab/errors.hpp"
#include "tourlab/tournament.hpp"

#include <optional>
#include <vector>

namespace tourlab {

/// Strictly increasing positions (0-based) p_0 < ... < p_{h-1} of g's
/// numbering whose induced ordered subtournament equals h position by
/// position; the lexicographically first such list.
inline std::optional<std::vector<int>> ordered_contains(const OrderedTournament& g, const OrderedTournament& h) {
    const int n = g.size(), k = h.size();
    if (k > n) return std::nullopt;
    std::vector<int> pos;
    auto rec = [&](auto&& self, int from) -> bool {
        const int i = static_cast<int>(pos.size());
        if (i == k) return true;
        for (int p = from; p <= n - (k - i); ++p) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = g.forward(pos[j], p) == h.forward(j, i);
            if (!ok) continue;
            pos.push_back(p);
            if (self(self, p + 1)) return true;
            pos.pop_back();
        }
        return false;
    };
    if (rec(rec, 0)) return pos;
    return std::nullopt;
}

/// For positions i < j < k: i -> j and j -> k imply i -> k.
inline bool is_ordered_poset(const OrderedTournament& ot) {
    const int n = ot.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!ot.forward(i, j)) continue;
            for (int k = j + 1; k < n; ++k)
                if (ot.forward(j, k) && !ot.forward(i, k)) return false;
        }
    return true;
}

inline constexpr int kPosetTournamentMax = 10;

/// A circular order with no clockwise cyclic triangle, reported as the
/// numbering read clockwise from vertex 0. Cutting a circular order anywhere
/// gives a numbering whose clockwise cyclic triangles are exactly the
/// ordered-poset violations, so the search fixes vertex 0 first.
inline std::optional<Numbering> is_poset_tournament(const Tournament& t) {
    const int n = t.size();
    if (n > kPosetTournamentMax) throw CapacityError("is_poset_tournament: limited to n <= 10");
    if (n == 0) return Numbering::identity(0);
    std::vector<int> seq{0};
    auto rec = [&](auto&& self, VertexSet used) -> bool {
        const int k = static_cast<int>(seq.size());
        if (k == n) return true;
        for (int w : t.vertices() - used) {
            bool ok = true;
            for (int j = 1; j < k && ok; ++j) {
                if (!t.edge(seq[j], w)) continue;
                for (int i = 0; i < j && ok; ++i)
                    if (t.edge(seq[i], seq[j]) && !t.edge(seq[i], w)) ok = false;
            }
            if (!ok) continue;
            seq.push_back(w);
            if (self(self, used.with(w))) return true;
            seq.pop_back();
        }
        return false;
    };
    if (rec(rec, VertexSet::single(0))) return Numbering{seq};
    return std::nullopt;
}

} // namespace tourlab
