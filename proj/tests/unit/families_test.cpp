#include <gtest/gtest.h>

#include <map>

#include "odcode/families.hpp"
#include "oracle.hpp"

using namespace odcode;

namespace {

std::map<CodeKind, std::size_t> predictions(const FamilySpec& spec) {
  std::map<CodeKind, std::size_t> out;
  for (const auto& p : predicted_gamma(spec)) out[p.kind] = p.value;
  return out;
}

Vertex at(const Graph& g, const std::string& label) {
  auto v = g.find_label(label);
  if (!v) throw std::runtime_error("missing label " + label);
  return *v;
}

}  // namespace

TEST(Families, SmallCoincidences) {
  EXPECT_TRUE(generate(FamilySpec::thin_spider(3)).same_structure(generate(FamilySpec::named_graph(NamedGraph::Net))));
  EXPECT_TRUE(oracle::isomorphic(oracle::from(generate(FamilySpec::half_graph(2))),
                                 oracle::from(generate(FamilySpec::path(4)))));
  EXPECT_TRUE(oracle::isomorphic(oracle::from(generate(FamilySpec::double_star(2))),
                                 oracle::from(generate(FamilySpec::path(5)))));
}

TEST(Families, Orders) {
  for (std::size_t k = 1; k <= 6; ++k) {
    EXPECT_EQ(generate(FamilySpec::half_graph(k)).order(), 2 * k);
    EXPECT_EQ(generate(FamilySpec::matching(k)).order(), 2 * k);
  }
  for (std::size_t k = 2; k <= 6; ++k) EXPECT_EQ(generate(FamilySpec::double_star(k)).order(), 2 * k + 1);
  for (std::size_t k = 3; k <= 7; ++k) {
    EXPECT_EQ(generate(FamilySpec::thin_sun(k, {})).order(), 2 * k);
    EXPECT_EQ(generate(FamilySpec::extended_thin_spider(k)).order(), 2 * k + 1);
  }
  EXPECT_EQ(generate(FamilySpec::clique_star({1, 2, 3})).order(), 7U);
  EXPECT_EQ(generate(FamilySpec::almost_complete_thin_sun(3)).order(), 12U);
}

TEST(Families, ExpectedOrderMatchesGenerate) {
  for (const auto& spec : family_catalog(14)) {
    EXPECT_EQ(generate(spec).order(), expected_order(spec)) << spec.describe();
  }
}

TEST(Families, HalfGraphEdges) {
  const auto g = generate(FamilySpec::half_graph(4));
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) {
      EXPECT_EQ(g.adjacent(at(g, "u" + std::to_string(i)), at(g, "w" + std::to_string(j))), i <= j);
    }
  }
  EXPECT_EQ(g.edge_count(), 10U);
}

TEST(Families, SpiderAdjacency) {
  const auto thin = generate(FamilySpec::thin_spider(4));
  const auto thick = generate(FamilySpec::thick_spider(4));
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) {
      const auto s = "s" + std::to_string(i);
      const auto q = "q" + std::to_string(j);
      EXPECT_EQ(thin.adjacent(at(thin, s), at(thin, q)), i == j);
      EXPECT_EQ(thick.adjacent(at(thick, s), at(thick, q)), i != j);
    }
  }
  const auto ext = generate(FamilySpec::extended_thin_spider(4));
  const auto s0 = at(ext, "s0");
  EXPECT_EQ(ext.degree(s0), 3U);
  EXPECT_FALSE(ext.adjacent(s0, at(ext, "q4")));
}

TEST(Families, ThinSunSpecialisations) {
  for (std::size_t k = 3; k <= 7; ++k) {
    EXPECT_TRUE(generate(FamilySpec::thin_sun(k, {})).same_structure(generate(FamilySpec::sunlet(k))));
    std::vector<std::pair<std::size_t, std::size_t>> chords;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 2; j < k; ++j) {
        if (!(i == 0 && j == k - 1)) chords.emplace_back(i, j);
      }
    }
    const auto sun = generate(FamilySpec::thin_sun(k, chords));
    const auto spider = generate(FamilySpec::thin_spider(k));
    // c_i plays q_i; edge sets agree under the role map.
    for (std::size_t a = 0; a < 2 * k; ++a) {
      for (std::size_t b = a + 1; b < 2 * k; ++b) {
        auto role = [&](const Graph& g, Vertex v, bool to_spider) {
          std::string l = g.label_or_index(v);
          if (to_spider && l[0] == 'c') l[0] = 'q';
          return l;
        };
        const auto la = role(sun, a, true);
        const auto lb = role(sun, b, true);
        EXPECT_EQ(sun.adjacent(a, b), spider.adjacent(at(spider, la), at(spider, lb)));
      }
    }
  }
}

TEST(Families, OpenCTwins) {
  const auto s4 = generate(FamilySpec::sunlet(4));
  EXPECT_EQ(open_c_twins(s4), (std::vector<VertexPair>{{at(s4, "c1"), at(s4, "c3")}, {at(s4, "c2"), at(s4, "c4")}}));
  std::vector<std::pair<std::size_t, std::size_t>> all = {{0, 2}, {1, 3}};
  EXPECT_TRUE(open_c_twins(generate(FamilySpec::thin_sun(4, all))).empty());
  for (std::size_t l = 3; l <= 5; ++l) {
    const auto g = generate(FamilySpec::almost_complete_thin_sun(l));
    const auto twins = open_c_twins(g);
    ASSERT_EQ(twins.size(), l);
    for (std::size_t i = 1; i <= l; ++i) {
      const auto a = at(g, "c" + std::to_string(i));
      const auto b = at(g, "c" + std::to_string(i + l));
      EXPECT_NE(std::find(twins.begin(), twins.end(), VertexPair{a, b}), twins.end());
    }
  }
  EXPECT_THROW(open_c_twins(generate(FamilySpec::path(4))), std::invalid_argument);
}

TEST(Families, Predictions) {
  auto hg = predictions(FamilySpec::half_graph(5));
  EXPECT_EQ(hg[CodeKind::OD], 9U);
  EXPECT_EQ(hg[CodeKind::OTD], 10U);
  auto ts = predictions(FamilySpec::thick_spider(6));
  EXPECT_EQ(ts[CodeKind::OD], 7U);
  EXPECT_EQ(ts[CodeKind::OTD], 7U);
  auto k2 = predictions(FamilySpec::clique(2));
  EXPECT_EQ(k2[CodeKind::OD], 1U);
  EXPECT_EQ(k2[CodeKind::OTD], 2U);
  // No stated value for identifying codes of half-graphs.
  EXPECT_EQ(hg.count(CodeKind::ID), 0U);
  for (const auto& p : predicted_gamma(FamilySpec::sunlet(6))) EXPECT_FALSE(p.source.empty());
}

TEST(Families, ParameterRanges) {
  EXPECT_THROW(generate(FamilySpec::fan(1)), std::invalid_argument);
  EXPECT_THROW(generate(FamilySpec::half_graph(0)), std::invalid_argument);
  EXPECT_THROW(generate(FamilySpec::double_star(1)), std::invalid_argument);
  EXPECT_THROW(generate(FamilySpec::thin_spider(2)), std::invalid_argument);
  EXPECT_THROW(generate(FamilySpec::sunlet(2)), std::invalid_argument);
  EXPECT_THROW(generate(FamilySpec::almost_complete_thin_sun(2)), std::invalid_argument);
  EXPECT_THROW(generate(FamilySpec::clique_star({1, 1, 3})), std::invalid_argument);
  EXPECT_THROW(generate(FamilySpec::thin_sun(5, {{0, 1}})), std::invalid_argument);
  EXPECT_NO_THROW(generate(FamilySpec::clique_star({1, 2})));
}

TEST(Families, Names) {
  EXPECT_EQ(FamilySpec::half_graph(3).describe(), "half-graph(k=3)");
  EXPECT_EQ(FamilySpec::clique_star({1, 2, 3}).describe(), "clique-star(sizes=1:2:3)");
  EXPECT_EQ(FamilySpec::named_graph(NamedGraph::Gem).describe(), "gem");
  auto f = family_from_name("thick-spider");
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->family, Family::ThickSpider);
  auto n = family_from_name("bull");
  ASSERT_TRUE(n.has_value());
  EXPECT_EQ(n->named, NamedGraph::Bull);
  EXPECT_FALSE(family_from_name("octopus").has_value());
}

TEST(Families, AdmissibleForPredictedKinds) {
  for (const auto& spec : family_catalog(14)) {
    const auto g = generate(spec);
    for (const auto& p : predicted_gamma(spec)) EXPECT_TRUE(is_admissible(g, p.kind)) << spec.describe();
  }
}

TEST(Families, RandomSamplerIsSeeded) {
  std::mt19937_64 a(7);
  std::mt19937_64 b(7);
  const auto g1 = random_twin_free_graph(8, 0.4, a);
  const auto g2 = random_twin_free_graph(8, 0.4, b);
  EXPECT_TRUE(g1.same_structure(g2));
  EXPECT_TRUE(is_admissible(g1, CodeKind::OTD));
}

TEST(Families, CorpusIsDeterministic) {
  const auto a = graph_corpus(8);
  const auto b = graph_corpus(8);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_TRUE(a[i].graph.same_structure(b[i].graph));
    EXPECT_LE(a[i].graph.order(), 8U);
  }
}
