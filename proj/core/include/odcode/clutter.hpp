#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "odcode/code_kind.hpp"
#include "odcode/graph.hpp"

namespace odcode {

struct Provenance {
  enum class Source { Neighborhood, Delta, Explicit };
  Source source = Source::Explicit;
  Vertex u = 0;
  Vertex v = 0;  // equals u for neighbourhood edges
  auto operator<=>(const Provenance&) const = default;
};

struct Hyperedge {
  VertexSet members;
  std::vector<Provenance> origins;
};

struct Hypergraph {
  std::size_t n = 0;
  CodeKind kind = CodeKind::OD;
  std::vector<Hyperedge> edges;
};

// Antichain of hyperedges sorted by (size, lexicographic members).
struct Clutter {
  std::size_t n = 0;
  std::vector<Hyperedge> edges;
  VertexSet ground;  // union of all edges
  VertexSet f1;      // members of singleton edges
  std::vector<VertexSet> f2;
  VertexSet v0;  // vertices in no edge

  std::vector<VertexSet> edge_sets() const;
};

// One domination edge per vertex, then one separation edge per unordered
// pair (u < v) in lexicographic pair order. Throws InadmissibleGraph.
Hypergraph build_hypergraph(const Graph& g, CodeKind kind);

// Removes duplicates and every edge that strictly contains another edge.
// Throws std::invalid_argument when an edge is empty.
Clutter reduce(const Hypergraph& h);

Clutter clutter_of(const Graph& g, CodeKind kind);
Clutter make_clutter(std::size_t n, const std::vector<VertexSet>& edges);

// Isolated vertices plus singleton deltas of non-adjacent pairs.
VertexSet forced_vertices_direct(const Graph& g);

// All q-subsets of members, as sets over a universe of size n.
std::vector<VertexSet> rose_edges(std::size_t n, const std::vector<Vertex>& members, std::size_t q);
Clutter complete_rose(std::size_t n, std::size_t q);

bool is_antichain(const std::vector<VertexSet>& edges);

// {"schema":1,"n":..,"edges":[[..],..],"f1":[..],"f2":[[..]],"v0":[..],"ground":[..]}
std::string clutter_to_json(const Clutter& c);
// Reads "n" and "edges" (other keys ignored) and reduces.
Clutter parse_clutter_json(std::string_view text);

}  // namespace odcode
