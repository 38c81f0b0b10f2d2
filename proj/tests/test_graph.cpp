#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "critgraph/graph.hpp"

using namespace critgraph;

TEST(VertexSetTest, AddRemoveContainsCount) {
    VertexSet s(130);
    EXPECT_EQ(s.count(), 0);
    s.add(0);
    s.add(64);
    s.add(129);
    EXPECT_TRUE(s.contains(0));
    EXPECT_TRUE(s.contains(64));
    EXPECT_TRUE(s.contains(129));
    EXPECT_FALSE(s.contains(1));
    EXPECT_EQ(s.count(), 3);
    EXPECT_EQ(s.members(), (std::vector<int>{0, 64, 129}));
    s.remove(64);
    EXPECT_FALSE(s.contains(64));
    EXPECT_EQ(s.count(), 2);
}

TEST(GraphTest, BasicAccessors) {
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(g.order(), 4);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_TRUE(g.edge(0, 1));
    EXPECT_TRUE(g.edge(1, 0));
    EXPECT_FALSE(g.edge(0, 2));
    EXPECT_EQ(g.degree(1), 2);
    EXPECT_EQ(g.degree(0), 1);
    EXPECT_EQ(g.min_degree(), 1);
    auto e = g.edges();
    EXPECT_EQ(e, (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(GraphTest, ConstructionRejects) {
    EXPECT_THROW(make_graph(0, {}), std::invalid_argument);
    EXPECT_THROW(make_graph(kMaxOrder + 1, {}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST(GraphTest, DuplicateEdgeIsIdempotent) {
    Graph g = make_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(g.edge_count(), 1);
}

TEST(GraphTest, NeighborsAndRows) {
    Graph g = make_graph(5, {{0, 1}, {0, 2}, {0, 4}});
    EXPECT_EQ(g.neighbors(0).members(), (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(g.row(0), 0b10110ull);
    EXPECT_EQ(g.row(3), 0ull);
}

TEST(GraphTest, Connectivity) {
    EXPECT_TRUE(make_graph(1, {}).connected());
    EXPECT_FALSE(make_graph(2, {}).connected());
    EXPECT_TRUE(circulant(5, {1}).connected());
    Graph two_paths = make_graph(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(two_paths.connected());
}

TEST(CirculantTest, CycleAndOffsets) {
    Graph c5 = circulant(5, {1});
    EXPECT_EQ(c5.edge_count(), 5);
    for (int i = 0; i < 5; ++i) {
        EXPECT_TRUE(c5.edge(i, (i + 1) % 5));
        EXPECT_EQ(c5.degree(i), 2);
    }
    Graph g = circulant(13, {1, 5, 8});
    for (int i = 0; i < 13; ++i) EXPECT_EQ(g.degree(i), 4);  // 8 = 13-5, symmetric pair
    EXPECT_THROW(circulant(5, {0}), std::invalid_argument);
    EXPECT_THROW(circulant(5, {5}), std::invalid_argument);
    // offset n-1 is the same edge set as offset 1
    EXPECT_EQ(circulant(6, {5}), circulant(6, {1}));
}

TEST(DeleteVertexTest, Renumbering) {
    Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph h = delete_vertex(p4, 1);
    EXPECT_EQ(h.order(), 3);
    // survivors 0,2,3 -> 0,1,2; only edge 2-3 survives as 1-2
    EXPECT_EQ(h.edges(), (std::vector<std::pair<int, int>>{{1, 2}}));
    EXPECT_THROW(delete_vertex(make_graph(1, {}), 0), std::invalid_argument);
    EXPECT_THROW(delete_vertex(p4, 4), std::invalid_argument);
}

TEST(DeleteVertexTest, CycleBecomesPath) {
    Graph c5 = circulant(5, {1});
    Graph p4 = delete_vertex(c5, 0);
    EXPECT_EQ(p4.order(), 4);
    EXPECT_EQ(p4.edge_count(), 3);
    EXPECT_EQ(p4.min_degree(), 1);
    EXPECT_TRUE(p4.connected());
}

TEST(DisjointUnionTest, Shifting) {
    Graph a = make_graph(2, {{0, 1}});
    Graph b = make_graph(3, {{0, 2}});
    Graph u = disjoint_union(a, b);
    EXPECT_EQ(u.order(), 5);
    EXPECT_EQ(u.edges(), (std::vector<std::pair<int, int>>{{0, 1}, {2, 4}}));
    EXPECT_FALSE(u.connected());
}

TEST(CommonNonNeighborsTest, CycleCase) {
    Graph c7 = circulant(7, {1});
    auto m = common_non_neighbors(c7, 0, 1);
    EXPECT_EQ(m.members(), (std::vector<int>{3, 4, 5}));
    EXPECT_THROW(common_non_neighbors(c7, 2, 2), std::invalid_argument);
}

TEST(CommonNonNeighborsTest, CirculantFamilyMember) {
    // 19-vertex member, offsets 1,5,8 (plus complements); non-neighbors
    // common to vertices 0 and 5 frozen from an independent computation
    Graph g = circulant(19, {1, 5, 8, 11, 14});
    auto m = common_non_neighbors(g, 0, 5);
    EXPECT_EQ(m.members(), (std::vector<int>{2, 3, 7, 9, 12, 15, 17}));
}

TEST(ExtendTest, AppendVertexWithMask) {
    Graph p2 = make_graph(2, {{0, 1}});
    Graph p3 = extend_with_neighbors(p2, 0b10);  // attach to vertex 1
    EXPECT_EQ(p3.order(), 3);
    EXPECT_TRUE(p3.edge(1, 2));
    EXPECT_FALSE(p3.edge(0, 2));
    EXPECT_THROW(extend_with_neighbors(p2, 0b100), std::invalid_argument);
    Graph cap = circulant(64, {1});
    EXPECT_THROW(extend_with_neighbors(cap, 1), std::invalid_argument);
}

TEST(PermutedTest, RelabelsEdges) {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    Graph q = permuted(p3, {2, 0, 1});  // old 0->2, 1->0, 2->1
    EXPECT_EQ(q.edges(), (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}}));
    // rotating a cycle is an automorphism
    Graph c5 = circulant(5, {1});
    EXPECT_EQ(permuted(c5, {1, 2, 3, 4, 0}), c5);
    EXPECT_THROW(permuted(p3, {0, 1}), std::invalid_argument);
}
