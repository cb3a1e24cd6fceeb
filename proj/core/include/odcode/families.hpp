#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odcode/code_kind.hpp"
#include "odcode/graph.hpp"

namespace odcode {

enum class Family {
  Clique,
  UnionOfCliques,
  CliqueStar,
  Fan,
  HalfGraph,
  DoubleStar,
  ThinSpider,
  ThickSpider,
  ExtendedThinSpider,
  Sunlet,
  AlmostCompleteThinSun,
  ThinSun,
  Path,
  Cycle,
  Matching,
  Named,
};

enum class NamedGraph { Gem, GemComplement, Bull, Bow, Net, Sun, TwoP2, P5 };

// Family plus parameters. k is the order for Clique/Path/Cycle and l for
// AlmostCompleteThinSun. Thin-sun chords are pairs of 0-based cycle positions.
struct FamilySpec {
  Family family = Family::Clique;
  std::size_t k = 0;
  std::vector<std::size_t> sizes;
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  NamedGraph named = NamedGraph::Gem;

  static FamilySpec clique(std::size_t n) { return make(Family::Clique, n); }
  static FamilySpec union_of_cliques(std::vector<std::size_t> sizes) {
    auto s = make(Family::UnionOfCliques, 0);
    s.sizes = std::move(sizes);
    return s;
  }
  static FamilySpec clique_star(std::vector<std::size_t> sizes) {
    auto s = make(Family::CliqueStar, 0);
    s.sizes = std::move(sizes);
    return s;
  }
  static FamilySpec fan(std::size_t k) { return make(Family::Fan, k); }
  static FamilySpec half_graph(std::size_t k) { return make(Family::HalfGraph, k); }
  static FamilySpec double_star(std::size_t k) { return make(Family::DoubleStar, k); }
  static FamilySpec thin_spider(std::size_t k) { return make(Family::ThinSpider, k); }
  static FamilySpec thick_spider(std::size_t k) { return make(Family::ThickSpider, k); }
  static FamilySpec extended_thin_spider(std::size_t k) { return make(Family::ExtendedThinSpider, k); }
  static FamilySpec sunlet(std::size_t k) { return make(Family::Sunlet, k); }
  static FamilySpec almost_complete_thin_sun(std::size_t l) {
    return make(Family::AlmostCompleteThinSun, l);
  }
  static FamilySpec thin_sun(std::size_t k, std::vector<std::pair<std::size_t, std::size_t>> chords) {
    auto s = make(Family::ThinSun, k);
    s.chords = std::move(chords);
    return s;
  }
  static FamilySpec path(std::size_t n) { return make(Family::Path, n); }
  static FamilySpec cycle(std::size_t n) { return make(Family::Cycle, n); }
  static FamilySpec matching(std::size_t k) { return make(Family::Matching, k); }
  static FamilySpec named_graph(NamedGraph g) {
    auto s = make(Family::Named, 0);
    s.named = g;
    return s;
  }
  static FamilySpec make(Family f, std::size_t k) {
    FamilySpec s;
    s.family = f;
    s.k = k;
    return s;
  }

  // e.g. "half-graph(k=3)", "clique-star(sizes=1:2:3)", "gem".
  std::string describe() const;
};

std::string_view family_name(Family f);
std::string_view named_graph_name(NamedGraph g);
// Accepts the family names of family_name() and the named-graph names.
std::optional<FamilySpec> family_from_name(std::string_view name);

// Throws std::invalid_argument when parameters are out of range.
void validate(const FamilySpec& spec);
Graph generate(const FamilySpec& spec);
std::size_t expected_order(const FamilySpec& spec);

struct GammaPrediction {
  CodeKind kind;
  std::size_t value;
  std::string source;
};

// Closed-form values known for the family; kinds without one are omitted.
std::vector<GammaPrediction> predicted_gamma(const FamilySpec& spec);

// Pairs of non-adjacent cycle vertices c_i, c_j of a thin sun with equal
// neighbourhoods inside the cycle. Needs the c1..ck labels of generate().
std::vector<VertexPair> open_c_twins(const Graph& g);

// Erdos-Renyi G(n, p) driven by raw 64-bit draws so that a seed gives the
// same graph on every platform.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);
// Rejection sampler for graphs with no open twins and no isolated vertex.
// Throws std::runtime_error after max_tries failed draws.
Graph random_twin_free_graph(std::size_t n, double p, std::mt19937_64& rng,
                             std::size_t max_tries = 100000);

// Every parametrised family instance of order <= max_order that carries at
// least one prediction, in a fixed order.
std::vector<FamilySpec> family_catalog(std::size_t max_order);

struct CorpusGraph {
  std::string name;
  Graph graph;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// Fixed test corpus: named graphs, paths, cycles, the family catalog, every
// labelled graph on at most four vertices and 60 seeded G(n, p) samples.
std::vector<CorpusGraph> graph_corpus(std::size_t max_order = 12, std::uint64_t seed = kDefaultSeed);

}  // namespace odcode
