#pragma once

#include "tourlab/tournament.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tourlab {

/// X_0 => X_1 => ... => X_{m-1} => X_0 with consecutive members disjoint and
/// m >= 3. Non-consecutive members may overlap.
struct Ring {
    std::vector<VertexSet> sets;
};

inline bool is_ring(const Tournament& t, const Ring& r) {
    const std::size_t m = r.sets.size();
    if (m < 3) return false;
    for (std::size_t i = 0; i < m; ++i) {
        const VertexSet x = r.sets[i], y = r.sets[(i + 1) % m];
        if (x.empty() || !x.disjoint(y) || !complete_to(t, x, y)) return false;
    }
    return true;
}

/// Successor rule: given the index of X, the index of a member Y disjoint
/// from X with Y => X, or nullopt.
using RingSuccessor = std::function<std::optional<std::size_t>(std::size_t)>;

/// Iterates the successor map from each start in index order until a member
/// repeats. The cycle found is returned oriented X_i => X_{i+1}. A successor
/// that breaks its contract raises std::invalid_argument.
inline std::optional<Ring> find_ring(const Tournament& t, const std::vector<VertexSet>& family,
                                     const RingSuccessor& successor) {
    const std::size_t m = family.size();
    for (VertexSet x : family)
        if (x.empty() || !x.subset_of(t.vertices()))
            throw std::invalid_argument("find_ring: members must be non-empty vertex sets");
    std::vector<int> state(m, 0);  // 0 unseen, 1 on current walk, 2 exhausted
    for (std::size_t start = 0; start < m; ++start) {
        if (state[start]) continue;
        std::vector<std::size_t> walk{start};
        state[start] = 1;
        for (;;) {
            const std::size_t cur = walk.back();
            const auto next = successor(cur);
            if (!next) break;
            if (*next >= m) throw std::invalid_argument("find_ring: successor index out of range");
            const VertexSet x = family[cur], y = family[*next];
            if (!x.disjoint(y) || !complete_to(t, y, x))
                throw std::invalid_argument("find_ring: successor of member " + std::to_string(cur) +
                                            " is not disjoint and complete to it");
            if (state[*next] == 2) break;
            if (state[*next] == 1) {
                const auto pos = std::find(walk.begin(), walk.end(), *next);
                Ring r;
                for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
                    r.sets.push_back(family[*it]);
                    if (it.base() - 1 == pos) break;
                }
                if (!is_ring(t, r)) throw std::logic_error("find_ring: closed walk is not a ring");
                return r;
            }
            state[*next] = 1;
            walk.push_back(*next);
        }
        for (std::size_t i : walk) state[i] = 2;
    }
    return std::nullopt;
}

} // namespace tourlab
