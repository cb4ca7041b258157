#include <gtest/gtest.h>

#include "hwp/errors.hpp"
#include "hwp/graph.hpp"
#include "support.hpp"

using namespace hwp;

TEST(Grid, ReducesCoordinates) {
  Grid g(9, 16);
  EXPECT_EQ(g.at(-1, 17), (Vertex{8, 1}));
  EXPECT_EQ(g.at(9, -16), (Vertex{0, 0}));
  EXPECT_EQ(g.vertex(g.index({4, 11})), (Vertex{4, 11}));
  EXPECT_EQ(mod(-33, 16), 15);
}

TEST(Edge, CanonicalOrder) {
  const Edge e = Edge::make({3, 2}, {1, 5});
  EXPECT_EQ(e.a, (Vertex{1, 5}));
  EXPECT_EQ(e, Edge::make({1, 5}, {3, 2}));
  EXPECT_THROW(Edge::make({1, 1}, {1, 1}), InvalidArgument);
}

TEST(EdgeSet, InsertIsIdempotentOnOrientation) {
  EdgeSet s;
  EXPECT_TRUE(s.insert(Edge{{0, 1}, {0, 0}}));
  EXPECT_FALSE(s.insert(Edge::make({0, 0}, {0, 1})));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.erase(Edge{{0, 1}, {0, 0}}));
  EXPECT_TRUE(s.empty());
}

TEST(ConnectionSet, RejectsUnclosedSets) {
  EXPECT_THROW(ConnectionSet(9, 16, {{1, 2}}), InvalidArgument);
  EXPECT_THROW(ConnectionSet(9, 16, {{0, 0}}), InvalidArgument);
  EXPECT_NO_THROW(ConnectionSet(9, 16, {{1, 2}, {8, 14}}));
  EXPECT_EQ(ConnectionSet::adjacent_rows(9, 16, {0, 2}).size(), 4u);
}

TEST(HostBuilders, EdgeCountsMatchDefinitions) {
  for (int m : {3, 9, 11}) {
    EXPECT_EQ(build_blown_cycle(m, 16).size(), std::size_t(256 * m));
    EXPECT_EQ(build_clique_copies(m, 16).size(), std::size_t(120 * m));
    EXPECT_EQ(build_wreath(m, 16).size(), std::size_t(376 * m));
    EXPECT_EQ(build_cayley_layer(m, 16, ConnectionSet::adjacent_rows(m, 16, {0})).size(), std::size_t(16 * m));
    EXPECT_EQ(build_cayley_layer(m, 16, ConnectionSet::adjacent_rows(m, 16, {3, 13})).size(),
              std::size_t(32 * m));
  }
}

TEST(HostBuilders, WreathMatchesIndependentEnumeration) {
  EXPECT_EQ(test::plain_edges(build_wreath(9, 16)), test::wreath_edges(9, 16));
}

TEST(HostBuilders, MatchingCopies) {
  const Matching mt{{0, 1}, {2, 3}};
  const EdgeSet e = build_matching_copies(5, 4, mt);
  EXPECT_EQ(e.size(), 10u);
  EXPECT_TRUE(e.contains(Edge::make({4, 2}, {4, 3})));
  EXPECT_THROW(build_matching_copies(5, 4, {{0, 1}, {1, 2}}), InvalidArgument);
}

TEST(HostBuilders, DisjointUnionNamesOverlappingParts) {
  const EdgeSet a = build_cayley_layer(9, 16, ConnectionSet::adjacent_rows(9, 16, {1, 15}));
  const EdgeSet b = build_cayley_layer(9, 16, ConnectionSet::adjacent_rows(9, 16, {15}));
  try {
    disjoint_union({{"first", a}, {"second", b}});
    FAIL() << "overlap not detected";
  } catch (const OverlapError& e) {
    EXPECT_EQ(e.first_label(), "first");
    EXPECT_EQ(e.second_label(), "second");
  }
  const EdgeSet c = build_cayley_layer(9, 16, ConnectionSet::adjacent_rows(9, 16, {3, 13}));
  EXPECT_EQ(disjoint_union({{"a", a}, {"c", c}}).size(), a.size() + c.size());
}

TEST(HostDescriptor, UnionRegeneratesParts) {
  const auto d = HostDescriptor::union_of(
      9, 16, {HostDescriptor::cayley(9, 16, {8}), HostDescriptor::table_matching(9, TableName::Iprime, 11)});
  EXPECT_EQ(build_host(d).size(), std::size_t(9 * 16 + 9 * 8));
  EXPECT_EQ(build_host(HostDescriptor::wreath(9, 16)), build_wreath(9, 16));
}

TEST(SymmetricClosure, SortedResidues) {
  EXPECT_EQ(symmetric_closure({2}, 16), (std::vector<int>{2, 14}));
  EXPECT_EQ(symmetric_closure({8, 0, -1}, 16), (std::vector<int>{0, 1, 8, 15}));
}
