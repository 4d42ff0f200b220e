#pragma once

#include "tourlab/submeasure.hpp"
#include "tourlab/tournament.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tourlab {

namespace detail {

inline void check_density_args(const Tournament& t, VertexSet p, VertexSet q) {
    if (!p.subset_of(t.vertices()) || !q.subset_of(t.vertices()))
        throw std::invalid_argument("density: set leaves the vertex range");
    if (p.intersects(q)) throw std::invalid_argument("density: p and q must be disjoint");
}

} // namespace detail

/// Vertices v of p with mu(N+(v) ∩ q) <= c.
inline VertexSet density_out(const Tournament& t, VertexSet p, VertexSet q, double c, const Submeasure& mu) {
    detail::check_density_args(t, p, q);
    VertexSet r;
    for (int v : p)
        if (mu(t.out(v) & q) <= c) r.insert(v);
    return r;
}

/// Vertices v of p with mu(N-(v) ∩ q) <= c.
inline VertexSet density_in(const Tournament& t, VertexSet p, VertexSet q, double c, const Submeasure& mu) {
    detail::check_density_args(t, p, q);
    VertexSet r;
    for (int v : p)
        if (mu(t.in(v) & q) <= c) r.insert(v);
    return r;
}

struct DensityGridResult {
    bool holds = true;
    bool evidence_only = true;  // a finite grid of c values never decides the property
    std::uint64_t checks = 0;
    std::optional<double> c;    // first failing grid value
    std::optional<VertexSet> q_sub;
};

inline constexpr int kDensityGridMaxQ = 16;

/// Out-density check on a finite grid: for each c in `grid` and every
/// q' ⊆ q with mu(q') >= g(c), requires mu(density_out(p, q', c)) < k.
inline DensityGridResult out_density_grid(const Tournament& t, VertexSet p, VertexSet q,
                                          const std::function<double(double)>& g, double k, const Submeasure& mu,
                                          const std::vector<double>& grid) {
    detail::check_density_args(t, p, q);
    if (q.size() > kDensityGridMaxQ) throw CapacityError("out_density_grid: |q| limited to 16");
    DensityGridResult r;
    for (double c : grid) {
        const double need = g(c);
        for_each_subset(q, [&](VertexSet qs) {
            if (!r.holds || mu(qs) < need) return;
            ++r.checks;
            if (mu(density_out(t, p, qs, c, mu)) >= k) {
                r.holds = false;
                r.c = c;
                r.q_sub = qs;
            }
        });
        if (!r.holds) break;
    }
    return r;
}

} // namespace tourlab
