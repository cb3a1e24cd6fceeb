#include <gtest/gtest.h>

#include <random>
#include <set>

#include "odcode/codes.hpp"
#include "odcode/families.hpp"
#include "oracle.hpp"

using namespace odcode;

namespace {

const std::vector<CorpusGraph>& corpus() {
  static const auto c = graph_corpus(10);
  return c;
}

std::vector<oracle::Mask> masks(const Clutter& c) {
  std::vector<oracle::Mask> out;
  for (const auto& e : c.edges) out.push_back(oracle::mask_of(e.members));
  return out;
}

Clutter random_clutter(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < m; ++i) {
    VertexSet e(n);
    const auto s = size(rng);
    while (e.count() < s) e.set(pick(rng));
    edges.push_back(e);
  }
  return make_clutter(n, edges);
}

}  // namespace

// Covers of the kind's hypergraph are exactly the codes, on every subset of small graphs.
TEST(ClutterProperties, CoversAreCodes) {
  for (const auto& [name, g] : corpus()) {
    if (g.order() > 7) continue;
    const auto o = oracle::from(g);
    for (auto kind : kAllKinds) {
      if (!is_admissible(g, kind)) continue;
      const auto h = build_hypergraph(g, kind);
      std::vector<oracle::Mask> edges;
      for (const auto& e : h.edges) edges.push_back(oracle::mask_of(e.members));
      for (oracle::Mask c = 0; c < (oracle::Mask{1} << g.order()); ++c) {
        const bool hits = std::all_of(edges.begin(), edges.end(), [c](oracle::Mask e) { return (e & c) != 0; });
        ASSERT_EQ(hits, oracle::is_code(o, c, kind)) << name << ' ' << to_string(kind) << " mask " << c;
      }
    }
  }
}

TEST(ClutterProperties, TauMatchesOracleMinimum) {
  for (const auto& [name, g] : corpus()) {
    const auto o = oracle::from(g);
    for (auto kind : kAllKinds) {
      if (!is_admissible(g, kind)) continue;
      const auto expected = oracle::min_code(o, kind);
      ASSERT_TRUE(expected.has_value()) << name;
      EXPECT_EQ(static_cast<int>(gamma(g, kind).value), *expected) << name << ' ' << to_string(kind);
    }
  }
}

TEST(ClutterProperties, AntichainAndIdempotent) {
  for (const auto& [name, g] : corpus()) {
    for (auto kind : kAllKinds) {
      if (!is_admissible(g, kind)) continue;
      const auto c = clutter_of(g, kind);
      EXPECT_TRUE(is_antichain(c.edge_sets())) << name;
      const auto again = make_clutter(c.n, c.edge_sets());
      EXPECT_EQ(again.edge_sets(), c.edge_sets()) << name;
      EXPECT_TRUE(std::is_sorted(c.edges.begin(), c.edges.end(), [](const Hyperedge& a, const Hyperedge& b) {
        return size_lex_less(a.members, b.members);
      }));
      EXPECT_TRUE((c.v0 & c.ground).empty());
      EXPECT_EQ(c.v0 | c.ground, VertexSet::full(c.n));
      VertexSet f1(c.n);
      for (const auto& e : c.edges) {
        if (e.members.count() == 1) f1 |= e.members;
      }
      EXPECT_EQ(f1, c.f1);
      EXPECT_EQ(c.f2.size() + c.f1.count(), c.edges.size());
    }
  }
}

TEST(ClutterProperties, ForcedAndUnusedVerticesInOptima) {
  for (const auto& [name, g] : corpus()) {
    if (g.order() > 9) continue;
    for (auto kind : kAllKinds) {
      if (!is_admissible(g, kind)) continue;
      const auto c = clutter_of(g, kind);
      const auto r = min_cover(c, true, 2000);
      for (const auto& s : *r.all_optima) {
        EXPECT_TRUE(c.f1.is_subset_of(s)) << name;
        EXPECT_FALSE(s.intersects(c.v0)) << name;
      }
    }
  }
}

TEST(ClutterProperties, ForcedVerticesDirectMatchesReduce) {
  for (const auto& [name, g] : corpus()) {
    if (!is_admissible(g, CodeKind::OD)) continue;
    EXPECT_EQ(forced_vertices_direct(g), clutter_of(g, CodeKind::OD).f1) << name;
  }
}

TEST(SolverProperties, RandomClutters) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 4 + static_cast<std::size_t>(t % 9);
    const auto c = random_clutter(n, 3 + static_cast<std::size_t>(t % 15), rng);
    const auto r = min_cover(c, true);
    const int expected = oracle::min_transversal(static_cast<int>(n), masks(c));
    ASSERT_EQ(static_cast<int>(r.value), expected);
    EXPECT_LE(r.value, greedy_cover(c).count());
    // Every minimum transversal is listed exactly once.
    std::set<oracle::Mask> listed;
    for (const auto& s : *r.all_optima) {
      EXPECT_EQ(s.count(), r.value);
      EXPECT_TRUE(hits_all(s, c.edge_sets()));
      listed.insert(oracle::mask_of(s));
    }
    EXPECT_EQ(listed.size(), r.all_optima->size());
    std::size_t count = 0;
    const auto ms = masks(c);
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << n); ++x) {
      if (oracle::popcount(x) != expected) continue;
      if (std::all_of(ms.begin(), ms.end(), [x](oracle::Mask e) { return (x & e) != 0; })) ++count;
    }
    EXPECT_EQ(listed.size(), count);
    EXPECT_EQ(min_cover(c).value, r.value);
  }
}

TEST(SolverProperties, Monotonicity) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 5 + static_cast<std::size_t>(t % 7);
    const auto c = random_clutter(n, 6, rng);
    const auto base = min_cover(c).value;
    auto edges = c.edge_sets();
    const auto extra = random_clutter(n, 1, rng).edge_sets().front();
    edges.push_back(extra);
    EXPECT_GE(min_cover(make_clutter(n, edges)).value, base);
    // A superset of an existing edge is redundant.
    auto with_superset = c.edge_sets();
    auto sup = with_superset.front();
    sup.set(static_cast<Vertex>(t) % n);
    with_superset.push_back(sup);
    EXPECT_EQ(min_cover(make_clutter(n, with_superset)).value, base);
  }
}
