#include "odcode/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace odcode {

std::string_view to_string(CodeKind k) {
  switch (k) {
    case CodeKind::OD:
      return "OD";
    case CodeKind::OTD:
      return "OTD";
    case CodeKind::ID:
      return "ID";
    case CodeKind::ITD:
      return "ITD";
    case CodeKind::LD:
      return "LD";
    case CodeKind::LTD:
      return "LTD";
  }
  return "?";
}

std::optional<CodeKind> parse_kind(std::string_view tag) {
  std::string upper(tag);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (CodeKind k : kAllKinds) {
    if (to_string(k) == upper) return k;
  }
  return std::nullopt;
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, Labels labels)
    : n_(n), adj_(n, VertexSet(n)), labels_(std::move(labels)) {
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                  " has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (adj_[e.u].test(e.v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(std::min(e.u, e.v)) + " " +
                                  std::to_string(std::max(e.u, e.v)));
    }
    adj_[e.u].set(e.v);
    adj_[e.v].set(e.u);
    ++m_;
  }
  for (const auto& [v, label] : labels_) {
    if (v >= n) throw std::invalid_argument("label on vertex " + std::to_string(v) + " out of range");
  }
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  return adj_[u].test(v);
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).count(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = adj_[u].next(u); v != VertexSet::npos; v = adj_[u].next(v)) out.push_back({u, v});
  }
  return out;
}

std::optional<Vertex> Graph::find_label(const std::string& label) const {
  for (const auto& [v, l] : labels_) {
    if (l == label) return v;
  }
  return std::nullopt;
}

std::string Graph::label_or_index(Vertex v) const {
  auto it = labels_.find(v);
  return it == labels_.end() ? std::to_string(v) : it->second;
}

bool Graph::same_structure(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

VertexSet open_nbhd(const Graph& g, Vertex v) { return g.neighbors(v); }

VertexSet closed_nbhd(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.set(v);
  return s;
}

VertexSet delta_open(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("delta of a vertex with itself");
  return g.neighbors(u) ^ g.neighbors(v);
}

VertexSet delta_closed(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("delta of a vertex with itself");
  return closed_nbhd(g, u) ^ closed_nbhd(g, v);
}

std::vector<VertexPair> open_twins(const Graph& g) {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.neighbors(u) == g.neighbors(v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<VertexPair> closed_twins(const Graph& g) {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (closed_nbhd(g, u) == closed_nbhd(g, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).empty()) out.push_back(v);
  }
  return out;
}

Admissibility is_admissible(const Graph& g, CodeKind kind) {
  Admissibility a;
  switch (separation(kind)) {
    case Separation::Open:
      a.twins = open_twins(g);
      break;
    case Separation::Closed:
      a.twins = closed_twins(g);
      break;
    case Separation::Locating:
      break;
  }
  if (domination(kind) == Domination::Open) a.isolated = isolated_vertices(g);
  a.admissible = a.twins.empty() && a.isolated.empty();
  if (!a.admissible) {
    std::ostringstream os;
    os << "graph is not " << to_string(kind) << "-admissible:";
    if (!a.twins.empty()) {
      os << (separation(kind) == Separation::Open ? " open" : " closed") << " twins";
      for (const auto& [u, v] : a.twins) os << " (" << u << ',' << v << ')';
      if (!a.isolated.empty()) os << ';';
    }
    if (!a.isolated.empty()) {
      os << " isolated";
      for (Vertex v : a.isolated) os << ' ' << v;
    }
    a.reason = os.str();
  }
  return a;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<std::size_t> dist(g.order(), kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    g.neighbors(x).for_each([&](Vertex y) {
      if (dist[y] == kInfinity) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    });
  }
  return dist;
}

std::size_t distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  return bfs_distances(g, u)[v];
}

std::size_t girth(const Graph& g) {
  std::size_t best = kInfinity;
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    parent[root] = VertexSet::npos;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (best != kInfinity && 2 * dist[x] >= best) break;
      g.neighbors(x).for_each([&](Vertex y) {
        if (dist[y] == kInfinity) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      });
    }
  }
  return best;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbors(x).for_each([&](Vertex y) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  return colour;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t shift = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (const auto& e : g2.edges()) edges.push_back({e.u + shift, e.v + shift});
  Labels labels = g1.labels();
  for (const auto& [v, l] : g2.labels()) labels[v + shift] = l;
  return Graph(g1.order() + g2.order(), edges, std::move(labels));
}

Graph remove_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v);
  auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.u != v && e.v != v) edges.push_back({shift(e.u), shift(e.v)});
  }
  Labels labels;
  for (const auto& [x, l] : g.labels()) {
    if (x != v) labels[shift(x)] = l;
  }
  return Graph(g.order() - 1, edges, std::move(labels));
}

}  // namespace odcode
