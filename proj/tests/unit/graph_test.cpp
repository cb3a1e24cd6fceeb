#include <gtest/gtest.h>

#include "odcode/families.hpp"
#include "odcode/graph.hpp"

using namespace odcode;

namespace {

// 0-based P4: 0-1-2-3.
Graph p4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

Graph star3() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {}, {{5, "x"}}), std::invalid_argument);
}

TEST(Graph, Neighbourhoods) {
  const auto g = p4();
  EXPECT_EQ(open_nbhd(g, 1), VertexSet(4, {0, 2}));
  EXPECT_EQ(closed_nbhd(g, 1), VertexSet(4, {0, 1, 2}));
  EXPECT_TRUE(open_nbhd(Graph(1), 0).empty());
  EXPECT_EQ(closed_nbhd(Graph(1), 0), VertexSet(1, {0}));
  const auto k5 = generate(FamilySpec::clique(5));
  EXPECT_EQ(closed_nbhd(k5, 2), VertexSet::full(5));
  EXPECT_THROW(open_nbhd(g, 4), std::out_of_range);
}

TEST(Graph, GemApexSeesThePath) {
  const auto gem = generate(FamilySpec::named_graph(NamedGraph::Gem));
  EXPECT_EQ(open_nbhd(gem, 4), VertexSet(5, {0, 1, 2, 3}));
}

TEST(Graph, SymmetricDifferences) {
  const auto g = p4();
  EXPECT_EQ(delta_open(g, 0, 2), VertexSet(4, {3}));
  EXPECT_EQ(delta_open(g, 0, 3), VertexSet(4, {1, 2}));
  EXPECT_EQ(delta_closed(g, 0, 1), VertexSet(4, {2}));
  EXPECT_EQ(delta_closed(Graph(2), 0, 1), VertexSet(2, {0, 1}));
  EXPECT_TRUE(delta_open(star3(), 1, 2).empty());
  EXPECT_THROW(delta_open(g, 1, 1), std::invalid_argument);
  EXPECT_THROW(delta_closed(g, 2, 2), std::invalid_argument);
}

TEST(Graph, Twins) {
  EXPECT_TRUE(open_twins(Graph(4, {{0, 1}, {2, 3}})).empty());
  EXPECT_EQ(open_twins(Graph(2)), (std::vector<VertexPair>{{0, 1}}));
  EXPECT_EQ(open_twins(star3()), (std::vector<VertexPair>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(closed_twins(generate(FamilySpec::clique(3))).size(), 3U);
  EXPECT_TRUE(closed_twins(p4()).empty());
  // Two triangles sharing vertex 2.
  const Graph butterfly(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(closed_twins(butterfly), (std::vector<VertexPair>{{0, 1}, {3, 4}}));
}

TEST(Graph, Admissibility) {
  EXPECT_FALSE(is_admissible(Graph(2), CodeKind::OD));
  EXPECT_TRUE(is_admissible(generate(FamilySpec::half_graph(3)), CodeKind::OTD));
  EXPECT_TRUE(is_admissible(generate(FamilySpec::half_graph(3)), CodeKind::OD));
  EXPECT_TRUE(is_admissible(Graph(3), CodeKind::LD));
  EXPECT_FALSE(is_admissible(Graph(3), CodeKind::LTD));
  const auto k1 = Graph(1);
  EXPECT_TRUE(is_admissible(k1, CodeKind::OD));
  EXPECT_FALSE(is_admissible(k1, CodeKind::OTD));
  const auto k3 = generate(FamilySpec::clique(3));
  EXPECT_FALSE(is_admissible(k3, CodeKind::ID));
  EXPECT_TRUE(is_admissible(k3, CodeKind::OD));
  const auto rep = is_admissible(star3(), CodeKind::OD);
  EXPECT_EQ(rep.twins.size(), 3U);
  EXPECT_FALSE(rep.reason.empty());
}

TEST(Graph, DistanceGirthBipartite) {
  const auto g = p4();
  EXPECT_EQ(distance(g, 0, 3), 3U);
  EXPECT_EQ(distance(g, 1, 2), 1U);
  EXPECT_EQ(distance(Graph(4, {{0, 1}, {2, 3}}), 0, 3), kInfinity);
  EXPECT_EQ(girth(generate(FamilySpec::cycle(6))), 6U);
  EXPECT_EQ(girth(star3()), kInfinity);
  EXPECT_EQ(girth(generate(FamilySpec::clique(4))), 3U);
  EXPECT_TRUE(is_bipartite(generate(FamilySpec::cycle(6))));
  EXPECT_FALSE(is_bipartite(generate(FamilySpec::clique(3))));
  const auto col = two_coloring(g);
  ASSERT_TRUE(col.has_value());
  for (const auto& e : g.edges()) EXPECT_NE((*col)[e.u], (*col)[e.v]);
  EXPECT_EQ(max_degree(generate(FamilySpec::clique(4))), 3U);
  EXPECT_EQ(max_degree(Graph(3)), 0U);
}

TEST(Graph, DisjointUnionAndRemoval) {
  const Graph k2(2, {{0, 1}});
  const auto two_k2 = disjoint_union(k2, k2);
  EXPECT_TRUE(two_k2.same_structure(generate(FamilySpec::matching(2))));
  const auto with_k1 = disjoint_union(p4(), Graph(1));
  EXPECT_EQ(with_k1.order(), 5U);
  EXPECT_EQ(with_k1.degree(4), 0U);
  auto m = k2;
  for (int i = 0; i < 3; ++i) m = disjoint_union(m, k2);
  EXPECT_TRUE(m.same_structure(generate(FamilySpec::matching(4))));
  const auto cut = remove_vertex(p4(), 1);
  EXPECT_EQ(cut.order(), 3U);
  EXPECT_EQ(cut.edge_count(), 1U);
}

TEST(Graph, Labels) {
  const Graph g(2, {{0, 1}}, {{0, "a"}});
  EXPECT_EQ(g.find_label("a"), Vertex{0});
  EXPECT_FALSE(g.find_label("b").has_value());
  EXPECT_EQ(g.label_or_index(0), "a");
  EXPECT_EQ(g.label_or_index(1), "1");
}

TEST(CodeKind, NamesRoundTrip) {
  for (auto k : kAllKinds) EXPECT_EQ(parse_kind(to_string(k)), k);
  EXPECT_EQ(parse_kind("otd"), CodeKind::OTD);
  EXPECT_FALSE(parse_kind("XYZ").has_value());
  EXPECT_EQ(domination(CodeKind::ITD), Domination::Open);
  EXPECT_EQ(separation(CodeKind::LD), Separation::Locating);
}
