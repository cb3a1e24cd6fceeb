#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "odcode/code_kind.hpp"
#include "odcode/vertex_set.hpp"

namespace odcode {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

using Labels = std::map<Vertex, std::string>;
using VertexPair = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

// Immutable simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws std::invalid_argument on loops, duplicate edges, out-of-range
  // endpoints or labels.
  Graph(std::size_t n, const std::vector<Edge>& edges, Labels labels = {});

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  const VertexSet& neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;

  // Edges with u < v in ascending order.
  std::vector<Edge> edges() const;

  const Labels& labels() const { return labels_; }
  std::optional<Vertex> find_label(const std::string& label) const;
  std::string label_or_index(Vertex v) const;

  bool same_structure(const Graph& other) const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
  Labels labels_;
};

VertexSet open_nbhd(const Graph& g, Vertex v);
VertexSet closed_nbhd(const Graph& g, Vertex v);
VertexSet delta_open(const Graph& g, Vertex u, Vertex v);
VertexSet delta_closed(const Graph& g, Vertex u, Vertex v);

std::vector<VertexPair> open_twins(const Graph& g);
std::vector<VertexPair> closed_twins(const Graph& g);
std::vector<Vertex> isolated_vertices(const Graph& g);

struct Admissibility {
  bool admissible = true;
  std::vector<VertexPair> twins;
  std::vector<Vertex> isolated;
  std::string reason;
  explicit operator bool() const { return admissible; }
};

Admissibility is_admissible(const Graph& g, CodeKind kind);

// BFS distance; kInfinity when u and v lie in different components.
std::size_t distance(const Graph& g, Vertex u, Vertex v);
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
// Length of a shortest cycle; kInfinity for forests.
std::size_t girth(const Graph& g);
// A proper 2-colouring (0/1 per vertex) when one exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);
std::size_t max_degree(const Graph& g);

Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph remove_vertex(const Graph& g, Vertex v);

}  // namespace odcode
