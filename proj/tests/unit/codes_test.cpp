#include <gtest/gtest.h>

#include "odcode/codes.hpp"
#include "odcode/errors.hpp"
#include "odcode/families.hpp"

using namespace odcode;

namespace {

Graph named(NamedGraph g) { return generate(FamilySpec::named_graph(g)); }
Graph p4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

}  // namespace

TEST(Verify, GemCode) {
  const auto gem = named(NamedGraph::Gem);
  const auto r = gamma(gem, CodeKind::OD);
  EXPECT_EQ(r.value, 3U);
  EXPECT_TRUE(verify(gem, r.witness, CodeKind::OD).valid);
  // Two path vertices at one end plus the far end.
  EXPECT_TRUE(is_code(gem, VertexSet(5, {0, 1, 3}), CodeKind::OD));
}

TEST(Verify, P4Code) {
  EXPECT_TRUE(is_code(p4(), VertexSet(4, {0, 1, 3}), CodeKind::OD));
  const auto bad = verify(p4(), VertexSet(4, {0, 3}), CodeKind::OD);
  EXPECT_FALSE(bad.valid);
  ASSERT_EQ(bad.unseparated.size(), 1U);
  EXPECT_EQ(bad.unseparated[0].u, 0U);
  EXPECT_EQ(bad.unseparated[0].v, 3U);
  EXPECT_TRUE(bad.undominated.empty());
}

TEST(Verify, EmptySetFailsEverywhere) {
  const auto r = verify(p4(), VertexSet(4), CodeKind::OTD);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.undominated.size(), 4U);
}

TEST(Verify, LocatingIgnoresCodePairs) {
  // {1,2} locates P4: 0 and 3 have traces {1} and {2}.
  EXPECT_TRUE(is_code(p4(), VertexSet(4, {1, 2}), CodeKind::LTD));
  EXPECT_FALSE(is_code(p4(), VertexSet(4, {1, 2}), CodeKind::OTD));
}

TEST(Verify, UniverseMismatchThrows) {
  EXPECT_THROW(verify(p4(), VertexSet(5), CodeKind::OD), std::invalid_argument);
}

TEST(Verify, ViolationListIsCapped) {
  const Graph empty(30);
  const auto r = verify(empty, VertexSet(30), CodeKind::OD);
  EXPECT_TRUE(r.truncated);
  EXPECT_LE(r.undominated.size() + r.unseparated.size(), kMaxReportedViolations);
}

TEST(Gamma, SmallGraphValues) {
  EXPECT_EQ(gamma(named(NamedGraph::Gem), CodeKind::ID).value, 4U);
  EXPECT_EQ(gamma(named(NamedGraph::Bow), CodeKind::OD).value, 5U);
  EXPECT_EQ(gamma(named(NamedGraph::Bow), CodeKind::ITD).value, 3U);
  EXPECT_EQ(gamma(named(NamedGraph::TwoP2), CodeKind::OD).value, 3U);
  EXPECT_EQ(gamma(named(NamedGraph::TwoP2), CodeKind::LTD).value, 4U);
  EXPECT_THROW(gamma(Graph(2), CodeKind::OD), InadmissibleGraph);
}

TEST(BruteForce, SmallGraphValues) {
  EXPECT_EQ(brute_force_gamma(p4(), CodeKind::LTD).value, 2U);
  EXPECT_EQ(brute_force_gamma(named(NamedGraph::Bull), CodeKind::OD).value, 3U);
  EXPECT_EQ(brute_force_gamma(Graph(2, {{0, 1}}), CodeKind::OD).value, 1U);
  EXPECT_THROW(brute_force_gamma(Graph(21), CodeKind::LD), std::invalid_argument);
  EXPECT_THROW(brute_force_gamma(Graph(2), CodeKind::OD), InadmissibleGraph);
}

TEST(OptimalCodes, AllVerify) {
  const auto g = generate(FamilySpec::half_graph(3));
  const auto r = optimal_codes(g, CodeKind::OD);
  ASSERT_TRUE(r.all_optima.has_value());
  for (const auto& s : *r.all_optima) EXPECT_TRUE(is_code(g, s, CodeKind::OD));
  // Exactly two minimum OD-codes.
  EXPECT_EQ(r.all_optima->size(), 2U);
}

TEST(OpenUndominated, P4) {
  EXPECT_EQ(open_undominated(p4(), VertexSet(4, {0, 3})), (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(open_undominated(p4(), VertexSet(4, {1, 2})).empty());
}

TEST(Relations, HalfGraphPlusIsolated) {
  const auto g = disjoint_union(generate(FamilySpec::half_graph(3)), Graph(1));
  const auto rep = check_relations(g);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.gammas.at(CodeKind::OD), 7U);
  const auto it = std::find_if(rep.relations.begin(), rep.relations.end(),
                               [](const Relation& r) { return r.status == RelationStatus::NotApplicable; });
  EXPECT_NE(it, rep.relations.end());
}

TEST(Relations, FanAndNet) {
  const auto fan = check_relations(generate(FamilySpec::fan(2)));
  EXPECT_TRUE(fan.ok());
  EXPECT_EQ(fan.gammas.at(CodeKind::OD), 3U);
  EXPECT_EQ(fan.gammas.at(CodeKind::OTD), 4U);
  const auto net = check_relations(named(NamedGraph::Net));
  EXPECT_EQ(net.gammas.at(CodeKind::OD), 3U);
  EXPECT_EQ(net.gammas.at(CodeKind::OTD), 3U);
  EXPECT_THROW(check_relations(Graph(2)), InadmissibleGraph);
}

TEST(Relations, CeilLog2) {
  EXPECT_EQ(ceil_log2(1), 0U);
  EXPECT_EQ(ceil_log2(2), 1U);
  EXPECT_EQ(ceil_log2(5), 3U);
  EXPECT_EQ(ceil_log2(8), 3U);
  EXPECT_EQ(to_string(RelationStatus::Pass), "pass");
}
