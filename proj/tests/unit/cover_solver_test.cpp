#include <gtest/gtest.h>

#include "odcode/cover_solver.hpp"
#include "odcode/families.hpp"

using namespace odcode;

TEST(Greedy, P4) {
  const auto c = clutter_of(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), CodeKind::OD);
  const auto s = greedy_cover(c);
  EXPECT_EQ(s.count(), 3U);
  EXPECT_TRUE(s.test(0) && s.test(3));
  EXPECT_TRUE(hits_all(s, c.edge_sets()));
}

TEST(Greedy, SingleEdgeTakesLowestIndex) {
  const auto c = make_clutter(5, {VertexSet(5, {3, 1})});
  EXPECT_EQ(greedy_cover(c), VertexSet(5, {1}));
}

TEST(Greedy, SingletonsOnly) {
  const auto c = make_clutter(6, {VertexSet(6, {0}), VertexSet(6, {2}), VertexSet(6, {5})});
  EXPECT_EQ(greedy_cover(c), VertexSet(6, {0, 2, 5}));
}

TEST(MinCover, FamilyValues) {
  EXPECT_EQ(min_cover(clutter_of(generate(FamilySpec::clique(5)), CodeKind::OD)).value, 4U);
  EXPECT_EQ(min_cover(clutter_of(generate(FamilySpec::thick_spider(4)), CodeKind::OD)).value, 5U);
}

TEST(MinCover, EmptyClutter) {
  const auto r = min_cover(make_clutter(3, {}));
  EXPECT_EQ(r.value, 0U);
  EXPECT_TRUE(r.witness.empty());
}

TEST(MinCover, EnumeratesCliqueOptima) {
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto r = min_cover(complete_rose(n, 2), true);
    ASSERT_TRUE(r.all_optima.has_value());
    EXPECT_EQ(r.all_optima->size(), n);
    for (const auto& s : *r.all_optima) EXPECT_EQ(s.count(), n - 1);
    EXPECT_FALSE(r.truncated);
    EXPECT_EQ(r.witness, r.all_optima->front());
  }
}

TEST(MinCover, CapTruncates) {
  const auto r = min_cover(complete_rose(6, 2), true, 2);
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.all_optima->size(), 2U);
  EXPECT_EQ(r.value, 5U);
  EXPECT_THROW(min_cover(complete_rose(4, 2), true, 0), std::invalid_argument);
}

TEST(MinCover, Deterministic) {
  const auto c = clutter_of(generate(FamilySpec::sunlet(7)), CodeKind::OD);
  const auto a = min_cover(c);
  const auto b = min_cover(c);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(TauRose, Formula) {
  EXPECT_EQ(tau_q_rose(5, 2), 4U);
  EXPECT_EQ(tau_q_rose(6, 5), 2U);
  EXPECT_EQ(tau_q_rose(3, 2), 2U);
  EXPECT_THROW(tau_q_rose(2, 2), std::invalid_argument);
  EXPECT_THROW(tau_q_rose(5, 1), std::invalid_argument);
}
