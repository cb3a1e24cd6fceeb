#include "odcode/clutter.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <numeric>

#include "odcode/errors.hpp"

namespace odcode {

std::vector<VertexSet> Clutter::edge_sets() const {
  std::vector<VertexSet> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(e.members);
  return out;
}

Hypergraph build_hypergraph(const Graph& g, CodeKind kind) {
  if (auto a = is_admissible(g, kind); !a) throw InadmissibleGraph(a.reason);
  const std::size_t n = g.order();
  Hypergraph h{n, kind, {}};
  h.edges.reserve(n + n * (n - 1) / 2);
  const bool closed_dom = domination(kind) == Domination::Closed;
  for (Vertex v = 0; v < n; ++v) {
    h.edges.push_back({closed_dom ? closed_nbhd(g, v) : open_nbhd(g, v),
                       {{Provenance::Source::Neighborhood, v, v}}});
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      VertexSet e;
      switch (separation(kind)) {
        case Separation::Open:
          e = delta_open(g, u, v);
          break;
        case Separation::Closed:
          e = delta_closed(g, u, v);
          break;
        case Separation::Locating:
          e = delta_open(g, u, v);
          e.set(u);
          e.set(v);
          break;
      }
      h.edges.push_back({std::move(e), {{Provenance::Source::Delta, u, v}}});
    }
  }
  return h;
}

Clutter reduce(const Hypergraph& h) {
  std::vector<std::size_t> order(h.edges.size());
  std::iota(order.begin(), order.end(), 0);
  for (const auto& e : h.edges) {
    if (e.members.empty()) throw std::invalid_argument("hypergraph contains an empty edge");
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return size_lex_less(h.edges[a].members, h.edges[b].members);
  });

  std::vector<Hyperedge> unique;
  for (std::size_t i : order) {
    const auto& e = h.edges[i];
    if (!unique.empty() && unique.back().members == e.members) {
      auto& o = unique.back().origins;
      o.insert(o.end(), e.origins.begin(), e.origins.end());
    } else {
      unique.push_back(e);
    }
  }

  Clutter c;
  c.n = h.n;
  c.ground = VertexSet(h.n);
  c.f1 = VertexSet(h.n);
  for (auto& e : unique) {
    const bool redundant = std::any_of(c.edges.begin(), c.edges.end(), [&](const Hyperedge& kept) {
      return kept.members.is_subset_of(e.members);
    });
    if (redundant) continue;
    std::sort(e.origins.begin(), e.origins.end());
    c.ground |= e.members;
    if (e.members.count() == 1) {
      c.f1 |= e.members;
    } else {
      c.f2.push_back(e.members);
    }
    c.edges.push_back(std::move(e));
  }
  c.v0 = VertexSet::full(h.n) - c.ground;
  return c;
}

Clutter clutter_of(const Graph& g, CodeKind kind) { return reduce(build_hypergraph(g, kind)); }

Clutter make_clutter(std::size_t n, const std::vector<VertexSet>& edges) {
  Hypergraph h{n, CodeKind::OD, {}};
  for (const auto& e : edges) {
    if (e.universe() != n) throw std::invalid_argument("edge universe does not match clutter size");
    h.edges.push_back({e, {}});
  }
  return reduce(h);
}

VertexSet forced_vertices_direct(const Graph& g) {
  if (auto a = is_admissible(g, CodeKind::OD); !a) throw InadmissibleGraph(a.reason);
  VertexSet out(g.order());
  for (Vertex v : isolated_vertices(g)) out.set(v);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      const VertexSet d = delta_open(g, u, v);
      if (d.count() == 1) out |= d;
    }
  }
  return out;
}

std::vector<VertexSet> rose_edges(std::size_t n, const std::vector<Vertex>& members, std::size_t q) {
  if (q == 0 || q > members.size()) throw std::invalid_argument("rose needs 1 <= q <= |members|");
  std::vector<VertexSet> out;
  std::vector<std::size_t> pick(q);
  std::iota(pick.begin(), pick.end(), 0);
  const std::size_t m = members.size();
  while (true) {
    VertexSet e(n);
    for (auto i : pick) e.set(members[i]);
    out.push_back(std::move(e));
    std::size_t i = q;
    while (i > 0 && pick[i - 1] == m - q + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < q; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Clutter complete_rose(std::size_t n, std::size_t q) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  return make_clutter(n, rose_edges(n, all, q));
}

bool is_antichain(const std::vector<VertexSet>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && edges[i].is_subset_of(edges[j])) return false;
    }
  }
  return true;
}

std::string clutter_to_json(const Clutter& c) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = c.n;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : c.edges) edges.push_back(e.members.to_vector());
  j["edges"] = std::move(edges);
  j["ground"] = c.ground.to_vector();
  j["v0"] = c.v0.to_vector();
  j["f1"] = c.f1.to_vector();
  auto f2 = nlohmann::ordered_json::array();
  for (const auto& e : c.f2) f2.push_back(e.to_vector());
  j["f2"] = std::move(f2);
  return j.dump() + "\n";
}

Clutter parse_clutter_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto n = j.at("n").get<std::size_t>();
    std::vector<VertexSet> edges;
    for (const auto& e : j.at("edges")) {
      VertexSet s(n);
      for (const auto& v : e) {
        const auto x = v.get<std::size_t>();
        if (x >= n) throw ParseError("edge member " + std::to_string(x) + " out of range");
        s.set(x);
      }
      edges.push_back(std::move(s));
    }
    return make_clutter(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed clutter JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace odcode
