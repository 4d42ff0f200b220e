#include "oracles.hpp"

#include "tourlab/constructions.hpp"
#include "tourlab/io.hpp"
#include "tourlab/structure/complete_pair.hpp"
#include "tourlab/structure/density.hpp"
#include "tourlab/structure/diamond.hpp"
#include "tourlab/structure/numbering.hpp"
#include "tourlab/structure/ordered.hpp"
#include "tourlab/structure/ring.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace tourlab;

namespace {

/// a => P => b => Q => a with P = {0,1,2} and Q = {3,4,5} cyclic triangles,
/// P => Q; a = 6, b = 7.
Tournament diamond_gadget() {
    auto beats = [](int u, int v) {
        auto in_p = [](int x) { return x < 3; };
        auto in_q = [](int x) { return x >= 3 && x < 6; };
        if (in_p(u) && in_p(v)) return (v - u + 3) % 3 == 1;
        if (in_q(u) && in_q(v)) return (v - u + 3) % 3 == 1;
        if (in_p(u) && in_q(v)) return true;
        if (in_q(u) && in_p(v)) return false;
        if (u == 6) return in_p(v) || v == 7;
        if (v == 6) return in_q(u);
        if (u == 7) return in_q(v);
        return in_p(u);  // v == 7
    };
    return Tournament::from_predicate(8, beats);
}

int brute_min_local(const Tournament& t) {
    std::vector<int> p(t.size());
    std::iota(p.begin(), p.end(), 0);
    int best = t.size();
    do best = std::min(best, oracle::local_chromatic(t, p));
    while (std::next_permutation(p.begin(), p.end()));
    return best;
}

} // namespace

TEST(CompletePair, Examples) {
    const CompletePair tr = best_complete_pair(Tournament::transitive(6));
    EXPECT_EQ(tr.quality, 1);
    EXPECT_TRUE(complete_to(Tournament::transitive(6), tr.a, tr.b));
    EXPECT_EQ(best_complete_pair(cyclic_triangle()).quality, 1);
    EXPECT_EQ(best_complete_pair(s_t(3)).quality, 2);
    EXPECT_TRUE(c_good(cyclic_triangle(), 0));
    EXPECT_FALSE(c_good(cyclic_triangle(), 2));
    EXPECT_TRUE(c_good(s_t(3), 2));
}

TEST(CompletePair, MatchesThreeWayOracle) {
    for (int seed = 0; seed < 12; ++seed) {
        const Tournament t = random_tournament(4 + seed % 4, 1200 + seed);
        const CompletePair r = best_complete_pair(t);
        EXPECT_EQ(r.quality, oracle::best_complete_pair(t)) << to_compact(t);
        EXPECT_TRUE(r.exact);
        EXPECT_TRUE(r.a.disjoint(r.b));
        EXPECT_TRUE(complete_to(t, r.a, r.b));
        EXPECT_EQ(std::min(chi(t, r.a), chi(t, r.b)), r.quality);
    }
}

TEST(CompletePair, HeuristicIsALowerBound) {
    const Tournament t = random_tournament(20, 4);
    EXPECT_THROW(best_complete_pair(t), CapacityError);
    const CompletePair h = best_complete_pair(t, true);
    EXPECT_FALSE(h.exact);
    EXPECT_TRUE(complete_to(t, h.a, h.b));
    EXPECT_GE(h.quality, 1);
}

TEST(Inout, Examples) {
    EXPECT_EQ(inout_witness(random_tournament(5, 1), 0), 0);
    EXPECT_EQ(inout_witness(cyclic_triangle(), 1), 0);
    const Tournament d = delta(cyclic_triangle(), cyclic_triangle(), cyclic_triangle());
    std::optional<int> expected;
    for (int v = 0; v < d.size() && !expected; ++v)
        if (oracle::chi_partitions(d, d.out(v)) >= 2 && oracle::chi_partitions(d, d.in(v)) >= 2) expected = v;
    EXPECT_EQ(inout_witness(d, 2), expected);
    EXPECT_EQ(expected, 0);
    EXPECT_EQ(inout_witness(Tournament::transitive(5), 1), 1);
    EXPECT_FALSE(inout_witness(Tournament::transitive(5), 2));
}

TEST(Diamond, Examples) {
    EXPECT_FALSE(max_diamond(Tournament::transitive(6)));
    const auto s3 = max_diamond(s_t(3));
    ASSERT_TRUE(s3);
    EXPECT_EQ(s3->chromatic, 1);
    EXPECT_TRUE(is_diamond(s_t(3), *s3));
    const auto g = max_diamond(diamond_gadget());
    ASSERT_TRUE(g);
    EXPECT_EQ(g->chromatic, 2);
}

TEST(Diamond, MatchesQuadrupleOracle) {
    for (int seed = 0; seed < 15; ++seed) {
        const Tournament t = random_tournament(3 + seed % 5, 1500 + seed);
        const auto d = max_diamond(t);
        EXPECT_EQ(d ? d->chromatic : 0, oracle::max_diamond(t)) << to_compact(t);
        if (d) {
            EXPECT_TRUE(is_diamond(t, *d));
        }
    }
}

TEST(Diamond, Predicate) {
    const Tournament g = diamond_gadget();
    EXPECT_TRUE(is_diamond(g, 6, 7, VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})));
    EXPECT_FALSE(is_diamond(g, 7, 6, VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})));
    EXPECT_FALSE(is_diamond(g, 6, 7, VertexSet{}, VertexSet::of({3})));
}

TEST(LocalChromatic, Examples) {
    const Tournament tr = Tournament::transitive(6);
    EXPECT_EQ(local_chromatic_number({tr, Numbering::identity(6)}), 0);
    std::vector<int> p{0, 1, 2};
    do EXPECT_EQ(local_chromatic_number({cyclic_triangle(), Numbering{p}}), 1);
    while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(strong_chromatic_number({tr, Numbering::identity(6)}), 0);
    EXPECT_EQ(numbering_clique({tr, Numbering::identity(6)}), 1);
    EXPECT_EQ(numbering_clique({tr, Numbering::reversed(6)}), 6);
}

TEST(LocalChromatic, LocalSetIsBackedgeNeighbourhood) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const Tournament t = random_tournament(10, trial);
        const OrderedTournament ot{t, random_numbering(10, rng)};
        const Graph g = backedge_graph(ot);
        for (int v = 0; v < 10; ++v) EXPECT_EQ(local_set(ot, v), g.neighbours(v));
        EXPECT_EQ(local_chromatic_number(ot), oracle::local_chromatic(t, ot.order.perm()));
    }
}

TEST(MinLocal, Examples) {
    const LocalNumbering tr = min_local_numbering(Tournament::transitive(5));
    EXPECT_EQ(tr.value, 0);
    EXPECT_EQ(tr.order, Numbering::identity(5));
    EXPECT_EQ(min_local_numbering(cyclic_triangle()).value, 1);
    const LocalNumbering s3 = min_local_numbering(s_t(3));
    EXPECT_EQ(s3.value, 1);
    EXPECT_EQ(local_chromatic_number({s_t(3), s3.order}), 1);
    EXPECT_THROW(min_local_numbering(random_tournament(10, 1)), CapacityError);
}

TEST(MinLocal, MatchesAllNumberings) {
    for (int seed = 0; seed < 12; ++seed) {
        const Tournament t = random_tournament(3 + seed % 4, 1800 + seed);
        const LocalNumbering r = min_local_numbering(t);
        EXPECT_EQ(r.value, brute_min_local(t)) << to_compact(t);
        EXPECT_EQ(local_chromatic_number({t, r.order}), r.value);
    }
}

TEST(MinLocal, HeuristicBeyondExactRange) {
    const Tournament t = random_tournament(14, 3);
    const LocalNumbering r = min_local_numbering(t, true);
    EXPECT_FALSE(r.exact);
    EXPECT_EQ(local_chromatic_number({t, r.order}), r.value);
}

TEST(DiamondFree, Examples) {
    EXPECT_TRUE(std::holds_alternative<Numbering>(diamond_free_numbering(Tournament::transitive(6), 0)));
    const auto g = diamond_free_numbering(diamond_gadget(), 0);
    ASSERT_TRUE(std::holds_alternative<Diamond>(g));
    const Diamond& d = std::get<Diamond>(g);
    EXPECT_TRUE(is_diamond(diamond_gadget(), d));
    EXPECT_GT(d.chromatic, 0);
    EXPECT_THROW(diamond_free_numbering(cyclic_triangle(), -1), std::invalid_argument);
}

TEST(DiamondFree, CrossingAtTwoGivesNumbering) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const CrossingTournament x = crossing(random_matching(14, rng));
        EXPECT_TRUE(std::holds_alternative<Numbering>(diamond_free_numbering(x.t, 2))) << to_matching_text(x.matching);
    }
}

TEST(DiamondFree, EitherOutcomeIsSound) {
    for (int seed = 0; seed < 20; ++seed) {
        const Tournament t = random_tournament(9, 2000 + seed);
        for (int c = 0; c <= 1; ++c) {
            const auto r = diamond_free_numbering(t, c);
            if (const auto* d = std::get_if<Diamond>(&r)) {
                EXPECT_TRUE(is_diamond(t, *d));
                EXPECT_GT(std::min(chi(t, d->p), chi(t, d->q)), c);
            }
        }
    }
}

TEST(Density, Examples) {
    const Tournament t = random_tournament(9, 31);
    const Submeasure mu = chi_measure(t);
    const VertexSet p = VertexSet::of({0, 1, 2, 3}), q = VertexSet::of({4, 5, 6, 7, 8});
    EXPECT_EQ(density_out(t, p, q, mu(q), mu), p);
    EXPECT_EQ(density_in(t, p, q, mu(q), mu), p);
    VertexSet expect;
    for (int v : p)
        if (t.edge(4, v)) expect.insert(v);
    EXPECT_EQ(density_out(t, p, VertexSet::single(4), 0, mu), expect);
    EXPECT_THROW(density_out(t, p, p, 0, mu), std::invalid_argument);
}

TEST(Density, GridIsEvidenceOnly) {
    const Tournament t = s_t(3);
    const Submeasure mu = chi_measure(t);
    const auto blocks = delta_blocks(3, 3, 1);
    auto g = [](double c) { return c + 1; };
    const DensityGridResult ok = out_density_grid(t, blocks[1], blocks[0], g, 3, mu, {0, 1});
    EXPECT_TRUE(ok.holds);
    EXPECT_TRUE(ok.evidence_only);
    EXPECT_GT(ok.checks, 0u);
    // blocks[0] => blocks[1], so nothing in blocks[1] reaches blocks[0].
    const DensityGridResult bad = out_density_grid(t, blocks[1], blocks[0], g, 1, mu, {0});
    EXPECT_FALSE(bad.holds);
    EXPECT_EQ(bad.c, 0.0);
}

TEST(Ring, CyclicTriangleSingletons) {
    const Tournament c3 = cyclic_triangle();
    const std::vector<VertexSet> family{VertexSet::single(0), VertexSet::single(1), VertexSet::single(2)};
    const auto r = find_ring(c3, family, [](std::size_t i) { return std::optional<std::size_t>((i + 2) % 3); });
    ASSERT_TRUE(r);
    EXPECT_EQ(r->sets.size(), 3u);
    EXPECT_TRUE(is_ring(c3, *r));
}

TEST(Ring, ChainHasNoRing) {
    const Tournament tr = Tournament::transitive(4);
    std::vector<VertexSet> family;
    for (int v = 0; v < 4; ++v) family.push_back(VertexSet::single(v));
    const auto r = find_ring(tr, family, [](std::size_t i) {
        return i == 0 ? std::nullopt : std::optional<std::size_t>(i - 1);
    });
    EXPECT_FALSE(r);
}

TEST(Ring, DeltaBlocks) {
    const Tournament d = delta(cyclic_triangle(), cyclic_triangle(), cyclic_triangle());
    const auto blocks = delta_blocks(3, 3, 3);
    const std::vector<VertexSet> family(blocks.begin(), blocks.end());
    const auto r = find_ring(d, family, [](std::size_t i) { return std::optional<std::size_t>((i + 2) % 3); });
    ASSERT_TRUE(r);
    EXPECT_TRUE(is_ring(d, *r));
    EXPECT_TRUE(complete_to(d, r->sets[0], r->sets[1]));
}

TEST(Ring, ContractViolationsThrow) {
    const Tournament c3 = cyclic_triangle();
    const std::vector<VertexSet> family{VertexSet::single(0), VertexSet::single(1), VertexSet::single(2)};
    EXPECT_THROW(find_ring(c3, family, [](std::size_t i) { return std::optional<std::size_t>((i + 1) % 3); }),
                 std::invalid_argument);
    EXPECT_THROW(find_ring(c3, {VertexSet{}}, [](std::size_t) { return std::nullopt; }), std::invalid_argument);
    EXPECT_FALSE(is_ring(c3, Ring{{VertexSet::single(0), VertexSet::single(1)}}));
}

TEST(Ordered, Contains) {
    const OrderedTournament g{random_tournament(6, 3), Numbering::identity(6)};
    const OrderedTournament one{single_vertex(), Numbering::identity(1)};
    EXPECT_EQ(ordered_contains(g, one), (std::vector<int>{0}));
    EXPECT_EQ(ordered_contains(g, g), (std::vector<int>{0, 1, 2, 3, 4, 5}));
    const OrderedTournament back{Tournament::transitive(2), Numbering::reversed(2)};
    EXPECT_FALSE(ordered_contains({Tournament::transitive(5), Numbering::identity(5)}, back));
    EXPECT_EQ(ordered_contains({Tournament::transitive(5), Numbering::reversed(5)}, back), (std::vector<int>{0, 1}));
}

TEST(Ordered, Poset) {
    EXPECT_TRUE(is_ordered_poset({Tournament::transitive(5), Numbering::identity(5)}));
    const auto c3 = is_poset_tournament(cyclic_triangle());
    ASSERT_TRUE(c3);
    EXPECT_TRUE(is_ordered_poset({cyclic_triangle(), *c3}));
    EXPECT_FALSE(is_ordered_poset({cyclic_triangle(), Numbering::identity(3)}));
}

TEST(Ordered, PosetTournamentMatchesAllOrders) {
    for (int seed = 0; seed < 30; ++seed) {
        const Tournament t = random_tournament(3 + seed % 4, 2400 + seed);
        std::vector<int> p(t.size());
        std::iota(p.begin(), p.end(), 0);
        bool any = false;
        do any = any || is_ordered_poset({t, Numbering{p}});
        while (!any && std::next_permutation(p.begin(), p.end()));
        const auto r = is_poset_tournament(t);
        EXPECT_EQ(r.has_value(), any) << to_compact(t);
        if (r) {
            EXPECT_TRUE(is_ordered_poset({t, *r}));
        }
    }
}
