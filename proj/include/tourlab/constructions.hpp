#pragma once

#include "tourlab/errors.hpp"
#include "tourlab/matching.hpp"
#include "tourlab/tournament.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tourlab {

/// 0 -> 1 -> 2 -> 0.
inline Tournament cyclic_triangle() {
    return Tournament::from_predicate(3, [](int u, int v) { return !(u == 0 && v == 2); });
}

inline Tournament single_vertex() { return Tournament::transitive(1); }

/// Delta(h1, h2, h3): blocks A1, A2, A3 in argument order with
/// A1 => A2 => A3 => A1.
inline Tournament delta(const Tournament& h1, const Tournament& h2, const Tournament& h3) {
    const std::array<Tournament, 3> parts{h1, h2, h3};
    return blowup(cyclic_triangle(), parts);
}

/// Blocks of delta(h1, h2, h3) as vertex sets.
inline std::array<VertexSet, 3> delta_blocks(int n1, int n2, int n3) {
    const std::array<int, 3> sizes{n1, n2, n3};
    const auto b = block_sets(sizes);
    return {b[0], b[1], b[2]};
}

/// S_1 = one vertex, S_t = Delta(S_{t-1}, S_{t-1}, 1); |S_t| = 2^t - 1.
inline Tournament s_t(int t) {
    if (t < 1) throw std::invalid_argument("s_t: t must be at least 1");
    if (t > 6) throw CapacityError("s_t: t > 6 exceeds 64 vertices");
    Tournament s = single_vertex();
    for (int i = 2; i <= t; ++i) s = delta(s, s, single_vertex());
    return s;
}

/// T_1 = one vertex, T_t = Delta(T_{t-1}, T_{t-1}, T_{t-1}); |T_t| = 3^(t-1).
inline Tournament t_t(int t) {
    if (t < 1) throw std::invalid_argument("t_t: t must be at least 1");
    if (t > 4) throw CapacityError("t_t: t > 4 exceeds 64 vertices");
    Tournament s = single_vertex();
    for (int i = 2; i <= t; ++i) s = delta(s, s, s);
    return s;
}

struct ChainPower {
    Tournament t;
    std::vector<VertexSet> parts;  // chain order: parts[i] => parts[j] for i < j
};

/// H^r: r copies of h with earlier copies complete to later ones.
inline ChainPower chain_power(const Tournament& h, int r) {
    if (r < 1) throw std::invalid_argument("chain_power: r must be at least 1");
    if (static_cast<long long>(r) * h.size() > kMaxVertices) throw CapacityError("chain_power: r * |h| exceeds 64");
    const std::vector<Tournament> copies(r, h);
    const std::vector<int> sizes(r, h.size());
    return {blowup(Tournament::transitive(r), copies), block_sets(sizes)};
}

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

/// Paley tournament on Z_q, q prime, q = 3 mod 4: x -> y iff x - y is a
/// non-zero square.
inline Tournament paley(int q) {
    if (q > kMaxVertices) throw CapacityError("paley: q exceeds 64");
    if (!is_prime(q) || q % 4 != 3) throw std::invalid_argument("paley: q must be a prime congruent to 3 mod 4");
    std::vector<bool> square(q, false);
    for (int x = 1; x < q; ++x) square[(x * x) % q] = true;
    return Tournament::from_predicate(q, [&](int x, int y) { return square[((x - y) % q + q) % q]; });
}

/// u -> v iff v is later than u in at least k of the 2k-1 orderings.
inline Tournament k_majority(const std::vector<Numbering>& orderings, int k) {
    if (k < 1 || static_cast<int>(orderings.size()) != 2 * k - 1)
        throw std::invalid_argument("k_majority: need exactly 2k-1 orderings");
    const int n = orderings.front().size();
    for (const auto& o : orderings)
        if (o.size() != n) throw std::invalid_argument("k_majority: orderings have different sizes");
    return Tournament::from_predicate(n, [&](int u, int v) {
        int later = 0;
        for (const auto& o : orderings)
            if (o.position(v) > o.position(u)) ++later;
        return later >= k;
    });
}

/// A crossing tournament with its defining matching (normalized, pairs in
/// ascending order of second coordinate). Vertex i is matching pair i, so
/// the identity numbering is the canonical one.
struct CrossingTournament {
    Tournament t;
    IntegerMatching matching;
    Numbering canonical() const { return Numbering::identity(t.size()); }
};

/// (a,b) -> (c,d) iff a < d and (c < a or c > b).
inline bool crossing_beats(const IntegerMatching::Pair& p, const IntegerMatching::Pair& q) {
    const auto [a, b] = p;
    const auto [c, d] = q;
    return a < d && (c < a || c > b);
}

inline CrossingTournament crossing(const IntegerMatching& m) {
    if (m.size() > kMaxVertices) throw CapacityError("crossing: more than 64 pairs");
    IntegerMatching norm = m.normalized();
    const auto& p = norm.pairs();
    Tournament t = Tournament::from_predicate(norm.size(), [&](int u, int v) {
        const bool uv = crossing_beats(p[u], p[v]);
        if (uv == crossing_beats(p[v], p[u])) throw std::logic_error("crossing predicate is not antisymmetric");
        return uv;
    });
    return {std::move(t), std::move(norm)};
}

/// Q = { f(a,b) : 1 <= a < b <= N } with f(a,b) = ((a-1)(N-1) + b - 1, (b-1)(N-1) + a):
/// the first end lies in block V_a, the second in V_b, where
/// V_i = {(i-1)(N-1)+1, ..., i(N-1)}. N is caller-supplied and is meant to be
/// a two-colour Ramsey threshold for K_{2|p|}; it is not checked.
inline IntegerMatching ramsey_amplify(const IntegerMatching& p, long long bigN) {
    (void)p;
    if (bigN < 2) throw std::invalid_argument("ramsey_amplify: N must be at least 2");
    std::vector<IntegerMatching::Pair> q;
    for (long long a = 1; a <= bigN; ++a)
        for (long long b = a + 1; b <= bigN; ++b) q.emplace_back((a - 1) * (bigN - 1) + b - 1, (b - 1) * (bigN - 1) + a);
    return IntegerMatching{std::move(q)};
}

/// Does `host` contain a sub-matching that is a copy of `pattern` (same
/// relative order of all endpoints)?
inline bool contains_copy(const IntegerMatching& host, const IntegerMatching& pattern) {
    const auto& hp = host.pairs();
    const auto& pp = pattern.pairs();
    if (pp.size() > hp.size()) return false;
    std::vector<int> pick(pp.size(), -1);
    std::vector<bool> used(hp.size(), false);
    auto same_order = [](long long x, long long y, long long u, long long v) { return (x < y) == (u < v); };
    auto consistent = [&](std::size_t i, std::size_t j) {
        const auto& [a1, b1] = pp[i];
        const auto& [a2, b2] = pp[j];
        const auto& [c1, d1] = hp[pick[i]];
        const auto& [c2, d2] = hp[pick[j]];
        return same_order(a1, a2, c1, c2) && same_order(a1, b2, c1, d2) && same_order(b1, a2, d1, c2) &&
               same_order(b1, b2, d1, d2);
    };
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == pp.size()) return true;
        for (std::size_t h = 0; h < hp.size(); ++h) {
            if (used[h]) continue;
            pick[i] = static_cast<int>(h);
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = consistent(j, i);
            if (ok) {
                used[h] = true;
                if (self(self, i + 1)) return true;
                used[h] = false;
            }
        }
        pick[i] = -1;
        return false;
    };
    return rec(rec, 0);
}

struct UkResult {
    CrossingTournament tournament;
    IntegerMatching matching;             // S before normalization
    std::vector<long long> witnesses;     // N used at levels 2..k
};

/// U_1 is one vertex. U_k is the crossing tournament of
/// S = R ∪ Q^{+b_1} ∪ ... ∪ Q^{+b_{k-1}}, where Q = ramsey_amplify(U_{k-1}, N_k)
/// normalized into {1..2q}, b_i = k+1+(2q+1)i and R = {(i, b_i) : 1 <= i <= k}.
/// ramsey_witnesses[j] is the N used to build level j+2.
inline UkResult u_k(int k, const std::vector<long long>& ramsey_witnesses) {
    if (k < 1) throw std::invalid_argument("u_k: k must be at least 1");
    if (static_cast<int>(ramsey_witnesses.size()) != k - 1)
        throw std::invalid_argument("u_k: need exactly k-1 Ramsey witnesses (one per level 2..k)");
    IntegerMatching level{std::vector<IntegerMatching::Pair>{{1, 2}}};
    for (int kk = 2; kk <= k; ++kk) {
        const long long bigN = ramsey_witnesses[kk - 2];
        if (bigN < 2 * static_cast<long long>(level.size()))
            throw std::invalid_argument("u_k: witness N = " + std::to_string(bigN) + " at level " + std::to_string(kk) +
                                        " is below 2|U_{k-1}| = " + std::to_string(2 * level.size()));
        const long long q_pairs = bigN * (bigN - 1) / 2;
        if (kk + (kk - 1) * q_pairs > kMaxVertices) throw CapacityError("u_k: construction exceeds 64 vertices");
        const IntegerMatching q = ramsey_amplify(level, bigN).normalized();
        const long long span = 2 * static_cast<long long>(q.size());
        std::vector<IntegerMatching::Pair> s;
        auto b = [&](long long i) { return kk + 1 + (span + 1) * i; };
        for (long long i = 1; i <= kk; ++i) s.emplace_back(i, b(i));
        for (long long i = 1; i <= kk - 1; ++i) {
            const IntegerMatching shifted = q.shifted(b(i));
            s.insert(s.end(), shifted.pairs().begin(), shifted.pairs().end());
        }
        level = IntegerMatching{std::move(s)};
    }
    return {crossing(level), level, ramsey_witnesses};
}

/// Uniform random tournament: std::mt19937_64 seeded with `seed`; pairs (u, v),
/// u < v, visited with u outer and v inner; u -> v iff the top bit of the next
/// 64-bit output is 1. Identical on every conforming platform.
inline Tournament random_tournament(int n, std::uint64_t seed) {
    check_capacity(n, "random_tournament");
    std::mt19937_64 rng(seed);
    return Tournament::from_predicate(n, [&](int, int) { return (rng() >> 63) != 0; });
}

/// Uniform random numbering (Fisher-Yates driven by raw mt19937_64 output).
inline Numbering random_numbering(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng() % static_cast<std::uint64_t>(i + 1)]);
    return Numbering{std::move(p)};
}

/// Random integer matching with `pairs` pairs on endpoints 1..2*pairs.
inline IntegerMatching random_matching(int pairs, std::mt19937_64& rng) {
    std::vector<long long> ends(2 * pairs);
    for (int i = 0; i < 2 * pairs; ++i) ends[i] = i + 1;
    for (int i = 2 * pairs - 1; i > 0; --i) std::swap(ends[i], ends[rng() % static_cast<std::uint64_t>(i + 1)]);
    std::vector<IntegerMatching::Pair> out;
    for (int i = 0; i < pairs; ++i) {
        long long a = ends[2 * i], b = ends[2 * i + 1];
        if (a > b) std::swap(a, b);
        out.emplace_back(a, b);
    }
    return IntegerMatching{std::move(out)};
}

} // namespace tourlab
