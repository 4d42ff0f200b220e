#include "tourlab/vertex_set.hpp"

#include <gtest/gtest.h>

#include <set>

using tourlab::VertexSet;

TEST(VertexSet, BasicMembership) {
    VertexSet s = VertexSet::of({0, 3, 63});
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(63));
    EXPECT_FALSE(s.contains(1));
    EXPECT_EQ(s.min(), 0);
    EXPECT_EQ(s.max(), 63);
    EXPECT_EQ(s.to_string(), "{0,3,63}");
    s.erase(0);
    EXPECT_EQ(s.min(), 3);
    EXPECT_EQ(s.with(5).without(5), s);
}

TEST(VertexSet, RangeCoversFullWord) {
    EXPECT_EQ(VertexSet::range(0).size(), 0);
    EXPECT_EQ(VertexSet::range(5).bits(), 0x1fu);
    EXPECT_EQ(VertexSet::range(64).size(), 64);
}

TEST(VertexSet, SetAlgebra) {
    const VertexSet a = VertexSet::of({1, 2, 3}), b = VertexSet::of({3, 4});
    EXPECT_EQ(a | b, VertexSet::of({1, 2, 3, 4}));
    EXPECT_EQ(a & b, VertexSet::single(3));
    EXPECT_EQ(a - b, VertexSet::of({1, 2}));
    EXPECT_EQ(a ^ b, VertexSet::of({1, 2, 4}));
    EXPECT_TRUE(VertexSet::of({1, 2}).subset_of(a));
    EXPECT_TRUE((a - b).disjoint(b));
    EXPECT_TRUE(a.intersects(b));
}

TEST(VertexSet, IterationIsAscending) {
    const VertexSet s = VertexSet::of({9, 1, 40});
    EXPECT_EQ(s.to_vector(), (std::vector<int>{1, 9, 40}));
    EXPECT_EQ(VertexSet::from_vector({40, 9, 1}), s);
}

TEST(VertexSet, ForEachSubsetVisitsEachOnce) {
    const VertexSet s = VertexSet::of({2, 5, 7, 11});
    std::set<std::uint64_t> seen;
    tourlab::for_each_subset(s, [&](VertexSet x) {
        EXPECT_TRUE(x.subset_of(s));
        seen.insert(x.bits());
    });
    EXPECT_EQ(seen.size(), 16u);
}
