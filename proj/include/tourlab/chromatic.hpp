#pragma once

#include "tourlab/contains.hpp"
#include "tourlab/errors.hpp"
#include "tourlab/tournament.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tourlab {

/// Calls f(T) for every transitive T with must ⊆ T ⊆ within that is maximal
/// among transitive subsets of `within`. `must` has to be transitive. f may
/// return true to stop early; the function then returns true.
template <typename F>
bool for_each_maximal_transitive(const Tournament& t, VertexSet within, VertexSet must, F&& f) {
    auto compatible = [&](VertexSet cur, VertexSet pool) {
        VertexSet ok;
        for (int x : pool)
            if (extends_transitive(t, cur, x)) ok.insert(x);
        return ok;
    };
    // cand: undecided vertices that still extend cur; excl: rejected vertices
    // that still extend cur (a leaf with non-empty excl is not maximal).
    auto rec = [&](auto&& self, VertexSet cur, VertexSet cand, VertexSet excl) -> bool {
        if (cand.empty()) {
            if (!excl.empty()) return false;
            return f(cur);
        }
        const int x = cand.min();
        const VertexSet with_x = cur.with(x);
        if (self(self, with_x, compatible(with_x, cand.without(x)), compatible(with_x, excl))) return true;
        return self(self, cur, cand.without(x), excl.with(x));
    };
    const VertexSet pool = within - must;
    return rec(rec, must, compatible(must, pool), VertexSet{});
}

/// Exact chromatic number with a witness partition into transitive classes.
struct ChiResult {
    int value = 0;
    std::vector<VertexSet> classes;  // sorted by smallest member
    std::uint64_t nodes = 0;
};

namespace detail {

struct ChiSearch {
    const Tournament& t;
    const Deadline& deadline;
    std::uint64_t nodes = 0;
    std::vector<std::unordered_set<std::uint64_t>> failed;  // failed[k]: sets not coverable by k classes
    std::vector<VertexSet> stack;

    bool feasible(VertexSet rest, int k) {
        deadline.poll(++nodes);
        if (rest.empty()) return true;
        if (k == 0) return false;
        if (is_transitive(t, rest)) {
            stack.push_back(rest);
            return true;
        }
        if (k == 1) return false;
        if (failed[k].count(rest.bits())) return false;
        const int v = rest.min();
        const bool ok = for_each_maximal_transitive(t, rest, VertexSet::single(v), [&](VertexSet cls) {
            stack.push_back(cls);
            if (feasible(rest - cls, k - 1)) return true;
            stack.pop_back();
            return false;
        });
        if (!ok) failed[k].insert(rest.bits());
        return ok;
    }
};

inline std::vector<VertexSet> sorted_classes(std::vector<VertexSet> cls) {
    std::sort(cls.begin(), cls.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
    return cls;
}

} // namespace detail

/// chi of the subtournament induced on s: iterative deepening over k, each
/// level covering the least uncovered vertex by a maximal transitive subset.
inline ChiResult chi_solve(const Tournament& t, VertexSet s, const Deadline& deadline = Deadline::none()) {
    if (!s.subset_of(t.vertices())) throw std::invalid_argument("chi: set leaves the vertex range");
    ChiResult r;
    if (s.empty()) return r;
    detail::ChiSearch search{t, deadline, 0, std::vector<std::unordered_set<std::uint64_t>>(s.size() + 1), {}};
    for (int k = 1; k <= s.size(); ++k) {
        search.stack.clear();
        if (search.feasible(s, k)) {
            r.value = k;
            r.classes = detail::sorted_classes(search.stack);
            break;
        }
    }
    r.nodes = search.nodes;
    return r;
}

inline ChiResult chi_solve(const Tournament& t) { return chi_solve(t, t.vertices()); }
inline int chi(const Tournament& t, VertexSet s) { return chi_solve(t, s).value; }
inline int chi(const Tournament& t) { return chi_solve(t).value; }

/// Table of chi over every subset of V(t), indexed by bitmask.
class ChiTable {
public:
    static constexpr int kMaxN = 20;

    explicit ChiTable(const Tournament& t, const Deadline& deadline = Deadline::none()) : n_(t.size()) {
        if (n_ > kMaxN) throw CapacityError("chi_all_subsets: n = " + std::to_string(n_) + " exceeds 20");
        const std::uint64_t total = std::uint64_t{1} << n_;
        table_.assign(total, 0);
        // transitive[] grows from smaller subsets: S is transitive iff S minus
        // its top vertex is and the top vertex extends it.
        std::vector<std::uint8_t> transitive(total, 1);
        for (std::uint64_t m = 1; m < total; ++m) {
            const VertexSet s{m};
            const int top = s.max();
            const VertexSet rest = s.without(top);
            transitive[m] = transitive[rest.bits()] && extends_transitive(t, rest, top);
        }
        // chi(S) is chi(S - top) or one more (monotone, subadditive). It equals
        // chi(S - top) iff some maximal transitive T ∋ top leaves S - T
        // colourable with one class fewer.
        for (std::uint64_t m = 1; m < total; ++m) {
            deadline.poll(m);
            if (transitive[m]) {
                table_[m] = 1;
                continue;
            }
            const VertexSet s{m};
            const int top = s.max();
            const int base = table_[s.without(top).bits()];
            const bool same = for_each_maximal_transitive(t, s, VertexSet::single(top), [&](VertexSet cls) {
                return table_[(s - cls).bits()] <= base - 1;
            });
            table_[m] = static_cast<std::uint8_t>(same ? base : base + 1);
        }
    }

    int size() const { return n_; }
    int operator()(VertexSet s) const { return table_[s.bits()]; }

private:
    int n_;
    std::vector<std::uint8_t> table_;
};

inline ChiTable chi_all_subsets(const Tournament& t) { return ChiTable{t}; }

/// chi on subsets of one tournament: table-backed for small n, memoized
/// direct search otherwise. Not thread-safe; meant as per-call scratch.
class ChiOracle {
public:
    explicit ChiOracle(const Tournament& t, int table_max = 16) : t_(t) {
        if (t.size() <= table_max) table_.emplace(t);
    }
    int operator()(VertexSet s) const {
        if (table_) return (*table_)(s);
        if (auto it = memo_.find(s.bits()); it != memo_.end()) return it->second;
        const int v = chi(t_, s);
        memo_.emplace(s.bits(), v);
        return v;
    }
    const Tournament& tournament() const { return t_; }

private:
    Tournament t_;
    std::optional<ChiTable> table_;
    mutable std::unordered_map<std::uint64_t, int> memo_;
};

// ---------------------------------------------------------------------------
// chi_H: partition into H-free parts
// ---------------------------------------------------------------------------

struct PartitionResult {
    int value = 0;
    std::vector<VertexSet> classes;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Smallest k such that the vertices of s split into k classes none of which
/// is `bad`. bad(cls, v) is asked right after v joins cls and only has to
/// detect violations involving v. Classes are opened in order (symmetry
/// breaking), vertices assigned in index order.
template <typename Bad>
PartitionResult min_partition(VertexSet s, Bad&& bad, const Deadline& deadline) {
    PartitionResult r;
    if (s.empty()) return r;
    const std::vector<int> verts = s.to_vector();
    std::vector<VertexSet> cls;
    auto rec = [&](auto&& self, std::size_t i, int k) -> bool {
        deadline.poll(++r.nodes);
        if (i == verts.size()) return true;
        const int v = verts[i];
        const int open = static_cast<int>(cls.size());
        for (int c = 0; c < open; ++c) {
            cls[c].insert(v);
            if (!bad(cls[c], v) && self(self, i + 1, k)) return true;
            cls[c].erase(v);
        }
        if (open < k) {
            cls.push_back(VertexSet::single(v));
            if (!bad(cls.back(), v) && self(self, i + 1, k)) return true;
            cls.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= static_cast<int>(verts.size()); ++k) {
        cls.clear();
        if (rec(rec, 0, k)) {
            r.value = k;
            r.classes = cls;
            return r;
        }
    }
    throw std::logic_error("min_partition: no feasible partition (a single vertex is forbidden)");
}

} // namespace detail

/// Minimum number of h-free parts covering V(t).
inline PartitionResult chi_h_solve(const Tournament& t, const Tournament& h, const Deadline& deadline = Deadline::none()) {
    if (h.size() == 0) throw std::invalid_argument("chi_h: pattern must have at least one vertex");
    if (h.size() == 1) {
        if (t.size() == 0) return {};
        throw std::invalid_argument("chi_h: a one-vertex pattern admits no non-empty h-free part");
    }
    return detail::min_partition(
        t.vertices(),
        [&](VertexSet cls, int) {
            if (cls.size() < h.size()) return false;
            return contains(induce(t, cls).t, h).has_value();
        },
        deadline);
}

inline int chi_h(const Tournament& t, const Tournament& h) { return chi_h_solve(t, h).value; }

// ---------------------------------------------------------------------------
// Laws
// ---------------------------------------------------------------------------

/// A family of vertex subsets, each containing a cyclic triangle of the
/// ambient tournament.
struct Law {
    int n = 0;
    std::vector<VertexSet> members;

    /// Maximum member size, or n when the law is empty.
    int order() const {
        if (members.empty()) return n;
        int m = 0;
        for (VertexSet s : members) m = std::max(m, s.size());
        return m;
    }

    void validate(const Tournament& t) const {
        if (n != t.size()) throw std::invalid_argument("law: ambient size does not match tournament");
        for (VertexSet s : members) {
            if (!s.subset_of(t.vertices())) throw std::invalid_argument("law member leaves the vertex range");
            if (is_transitive(t, s)) throw std::invalid_argument("law member " + s.to_string() + " contains no cyclic triangle");
        }
    }

    /// The law of all cyclic triangles of t.
    static Law triangles(const Tournament& t) { return {t.size(), cyclic_triangles(t, t.vertices())}; }
};

/// Hypergraph chromatic number of the law: fewest classes none of which
/// includes a member.
inline PartitionResult chi_law_solve(const Tournament& t, const Law& law, const Deadline& deadline = Deadline::none()) {
    law.validate(t);
    std::vector<std::vector<VertexSet>> by_vertex(t.size());
    for (VertexSet m : law.members)
        for (int v : m) by_vertex[v].push_back(m);
    return detail::min_partition(
        t.vertices(),
        [&](VertexSet cls, int v) {
            for (VertexSet m : by_vertex[v])
                if (m.subset_of(cls)) return true;
            return false;
        },
        deadline);
}

inline int chi_law(const Tournament& t, const Law& law) { return chi_law_solve(t, law).value; }

} // namespace tourlab
