#pragma once

#include "tourlab/errors.hpp"
#include "tourlab/tournament.hpp"

#include <cstdint>
#include <vector>

namespace tourlab {

inline constexpr int kCanonicalMax = 8;

/// Lexicographically least lower-triangular bitstring over all vertex
/// orders, packed first-bit-most-significant into `code`. Two tournaments
/// share a form iff they are isomorphic.
struct CanonicalForm {
    int n = 0;
    std::uint64_t code = 0;
    std::vector<int> perm;  // canonical vertex i is input vertex perm[i]

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.n == b.n && a.code == b.code; }
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.n != b.n) return a.n <=> b.n;
        return a.code <=> b.code;
    }
};

inline int triangle_bits(int n) { return n * (n - 1) / 2; }

/// Code of t under its own labelling.
inline std::uint64_t labelled_code(const Tournament& t) {
    std::uint64_t c = 0;
    for (int i = 1; i < t.size(); ++i)
        for (int j = 0; j < i; ++j) c = (c << 1) | (t.edge(i, j) ? 1u : 0u);
    return c;
}

/// Exhaustive minimization over vertex orders. Rows are fixed one vertex at
/// a time; a branch stops once its prefix exceeds the best prefix seen.
inline CanonicalForm canonical_form(const Tournament& t) {
    const int n = t.size();
    if (n > kCanonicalMax) throw CapacityError("canonical_form: limited to n <= 8");
    CanonicalForm best{n, ~std::uint64_t{0}, {}};
    if (n <= 1) {
        best.code = 0;
        for (int i = 0; i < n; ++i) best.perm.push_back(i);
        return best;
    }
    const int total = triangle_bits(n);
    std::vector<int> perm;
    bool have = false;
    // prefix: the bits of rows 1..k-1, right-aligned.
    auto rec = [&](auto&& self, VertexSet used, std::uint64_t prefix) -> void {
        const int k = static_cast<int>(perm.size());
        if (k == n) {
            if (!have || prefix < best.code) {
                best.code = prefix;
                best.perm = perm;
                have = true;
            }
            return;
        }
        const int len = triangle_bits(k + 1);
        for (int w : t.vertices() - used) {
            std::uint64_t p = prefix;
            for (int j = 0; j < k; ++j) p = (p << 1) | (t.edge(w, perm[j]) ? 1u : 0u);
            if (have && p > (best.code >> (total - len))) continue;
            perm.push_back(w);
            self(self, used.with(w), p);
            perm.pop_back();
        }
    };
    rec(rec, VertexSet{}, 0);
    return best;
}

inline Tournament from_code(int n, std::uint64_t code) {
    const int total = triangle_bits(n);
    return Tournament::from_predicate(n, [&](int u, int v) {
        // bit for (v, u), v > u, at row-major index v(v-1)/2 + u
        const int idx = v * (v - 1) / 2 + u;
        return ((code >> (total - 1 - idx)) & 1u) == 0;
    });
}

inline Tournament canonical_tournament(const Tournament& t) { return from_code(t.size(), canonical_form(t).code); }

inline bool is_canonical(const Tournament& t) { return canonical_form(t).code == labelled_code(t); }

} // namespace tourlab
