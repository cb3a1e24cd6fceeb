#include "odcode/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace odcode {

namespace {

struct Builder {
  std::size_t n = 0;
  std::vector<Edge> edges;
  Labels labels;

  Vertex add(std::string label) {
    labels[n] = std::move(label);
    return n++;
  }
  void connect(Vertex u, Vertex v) { edges.push_back({std::min(u, v), std::max(u, v)}); }
  void clique(const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) connect(vs[i], vs[j]);
    }
  }
  Graph build() { return Graph(n, edges, std::move(labels)); }
};

std::string idx(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<Vertex> add_clique_parts(Builder& b, const std::vector<std::size_t>& sizes,
                                     std::vector<std::vector<Vertex>>* parts) {
  std::vector<Vertex> all;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<Vertex> part;
    for (std::size_t j = 0; j < sizes[i]; ++j) {
      part.push_back(b.add("v" + std::to_string(i + 1) + "_" + std::to_string(j + 1)));
    }
    b.clique(part);
    all.insert(all.end(), part.begin(), part.end());
    if (parts != nullptr) parts->push_back(std::move(part));
  }
  return all;
}

// Cycle c1..ck, pendant s_i on c_i, plus chords between cycle positions.
Graph thin_sun_graph(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& chords) {
  Builder b;
  std::vector<Vertex> c;
  std::vector<Vertex> s;
  for (std::size_t i = 1; i <= k; ++i) c.push_back(b.add(idx("c", i)));
  for (std::size_t i = 1; i <= k; ++i) s.push_back(b.add(idx("s", i)));
  for (std::size_t i = 0; i < k; ++i) {
    b.connect(c[i], c[(i + 1) % k]);
    b.connect(s[i], c[i]);
  }
  for (const auto& [i, j] : chords) b.connect(c[i], c[j]);
  return b.build();
}

// Headless spider: clique q1..qk, stable s1..sk; s_i ~ q_j iff (i == j) == thin.
Builder spider(std::size_t k, bool thin) {
  Builder b;
  std::vector<Vertex> q;
  for (std::size_t i = 1; i <= k; ++i) q.push_back(b.add(idx("q", i)));
  b.clique(q);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex s = b.add(idx("s", i + 1));
    for (std::size_t j = 0; j < k; ++j) {
      if ((i == j) == thin) b.connect(s, q[j]);
    }
  }
  return b;
}

std::vector<std::pair<std::size_t, std::size_t>> almost_complete_chords(std::size_t l) {
  const std::size_t k = 2 * l;
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (j == i + l) continue;
      chords.emplace_back(i, j);
    }
  }
  return chords;
}

bool is_cycle_edge(std::size_t k, std::size_t i, std::size_t j) {
  return (i + 1) % k == j || (j + 1) % k == i;
}

Graph named(NamedGraph g) {
  switch (g) {
    case NamedGraph::Gem:
      return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    case NamedGraph::GemComplement:
      return Graph(5, {{0, 2}, {0, 3}, {1, 3}});
    case NamedGraph::Bull:
      return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
    case NamedGraph::Bow:
      return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
    case NamedGraph::Net:
      return spider(3, true).build();
    case NamedGraph::Sun:
      return spider(3, false).build();
    case NamedGraph::TwoP2:
      return Graph(4, {{0, 1}, {2, 3}});
    case NamedGraph::P5:
      return generate(FamilySpec::path(5));
  }
  throw std::invalid_argument("unknown named graph");
}

struct NameEntry {
  std::string_view name;
  Family family;
};

constexpr NameEntry kFamilyNames[] = {
    {"clique", Family::Clique},
    {"union-of-cliques", Family::UnionOfCliques},
    {"clique-star", Family::CliqueStar},
    {"fan", Family::Fan},
    {"half-graph", Family::HalfGraph},
    {"double-star", Family::DoubleStar},
    {"thin-spider", Family::ThinSpider},
    {"thick-spider", Family::ThickSpider},
    {"extended-thin-spider", Family::ExtendedThinSpider},
    {"sunlet", Family::Sunlet},
    {"almost-complete-thin-sun", Family::AlmostCompleteThinSun},
    {"thin-sun", Family::ThinSun},
    {"path", Family::Path},
    {"cycle", Family::Cycle},
    {"matching", Family::Matching},
    {"named", Family::Named},
};

constexpr std::pair<std::string_view, NamedGraph> kNamedGraphs[] = {
    {"gem", NamedGraph::Gem},   {"gem-complement", NamedGraph::GemComplement},
    {"bull", NamedGraph::Bull}, {"bow", NamedGraph::Bow},
    {"net", NamedGraph::Net},   {"sun", NamedGraph::Sun},
    {"2p2", NamedGraph::TwoP2}, {"p5", NamedGraph::P5},
};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& e : kFamilyNames) {
    if (e.family == f) return e.name;
  }
  return "?";
}

std::string_view named_graph_name(NamedGraph g) {
  for (const auto& [name, value] : kNamedGraphs) {
    if (value == g) return name;
  }
  return "?";
}

std::optional<FamilySpec> family_from_name(std::string_view name) {
  for (const auto& e : kFamilyNames) {
    if (e.name == name && e.family != Family::Named) return FamilySpec::make(e.family, 0);
  }
  for (const auto& [n, value] : kNamedGraphs) {
    if (n == name) return FamilySpec::named_graph(value);
  }
  return std::nullopt;
}

std::string FamilySpec::describe() const {
  if (family == Family::Named) return std::string(named_graph_name(named));
  std::ostringstream os;
  os << family_name(family) << '(';
  switch (family) {
    case Family::Clique:
    case Family::Path:
    case Family::Cycle:
      os << "n=" << k;
      break;
    case Family::AlmostCompleteThinSun:
      os << "l=" << k;
      break;
    case Family::UnionOfCliques:
    case Family::CliqueStar:
      os << "sizes=";
      for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? ":" : "") << sizes[i];
      break;
    case Family::ThinSun:
      os << "k=" << k << ",chords=";
      for (std::size_t i = 0; i < chords.size(); ++i) {
        os << (i ? ":" : "") << chords[i].first << '-' << chords[i].second;
      }
      break;
    default:
      os << "k=" << k;
  }
  os << ')';
  return os.str();
}

void validate(const FamilySpec& spec) {
  const auto k = spec.k;
  const std::string name = std::string(family_name(spec.family));
  switch (spec.family) {
    case Family::Clique:
    case Family::Path:
      require(k >= 1, name + " needs n >= 1");
      break;
    case Family::Cycle:
      require(k >= 3, "cycle needs n >= 3");
      break;
    case Family::Matching:
    case Family::HalfGraph:
      require(k >= 1, name + " needs k >= 1");
      break;
    case Family::Fan:
    case Family::DoubleStar:
      require(k >= 2, name + " needs k >= 2");
      break;
    case Family::ThinSpider:
    case Family::ThickSpider:
    case Family::ExtendedThinSpider:
    case Family::Sunlet:
      require(k >= 3, name + " needs k >= 3");
      break;
    case Family::AlmostCompleteThinSun:
      require(k >= 3, "almost-complete-thin-sun needs l >= 3");
      break;
    case Family::UnionOfCliques:
      require(spec.sizes.size() >= 2, "union-of-cliques needs at least two parts");
      for (auto s : spec.sizes) require(s >= 2, "union-of-cliques parts need size >= 2");
      break;
    case Family::CliqueStar: {
      require(spec.sizes.size() >= 2, "clique-star needs at least two parts");
      std::size_t ones = 0;
      for (auto s : spec.sizes) {
        require(s >= 1, "clique-star parts need size >= 1");
        ones += s == 1 ? 1 : 0;
      }
      require(ones <= 1, "clique-star allows at most one part of size 1");
      break;
    }
    case Family::ThinSun: {
      require(k >= 3, "thin-sun needs k >= 3");
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (auto [i, j] : spec.chords) {
        require(i < k && j < k && i != j, "thin-sun chord endpoints must be distinct positions < k");
        require(!is_cycle_edge(k, i, j), "thin-sun chord duplicates a cycle edge");
        require(seen.insert({std::min(i, j), std::max(i, j)}).second, "duplicate thin-sun chord");
      }
      break;
    }
    case Family::Named:
      break;
  }
}

std::size_t expected_order(const FamilySpec& spec) {
  const auto k = spec.k;
  switch (spec.family) {
    case Family::Clique:
    case Family::Path:
    case Family::Cycle:
      return k;
    case Family::UnionOfCliques:
      return std::accumulate(spec.sizes.begin(), spec.sizes.end(), std::size_t{0});
    case Family::CliqueStar:
      return 1 + std::accumulate(spec.sizes.begin(), spec.sizes.end(), std::size_t{0});
    case Family::Fan:
    case Family::DoubleStar:
    case Family::ExtendedThinSpider:
      return 2 * k + 1;
    case Family::HalfGraph:
    case Family::ThinSpider:
    case Family::ThickSpider:
    case Family::Sunlet:
    case Family::ThinSun:
    case Family::Matching:
      return 2 * k;
    case Family::AlmostCompleteThinSun:
      return 4 * k;
    case Family::Named:
      switch (spec.named) {
        case NamedGraph::Bow:
        case NamedGraph::Net:
        case NamedGraph::Sun:
          return 6;
        case NamedGraph::TwoP2:
          return 4;
        default:
          return 5;
      }
  }
  return 0;
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  const auto k = spec.k;
  switch (spec.family) {
    case Family::Clique: {
      Builder b;
      std::vector<Vertex> vs;
      for (std::size_t i = 1; i <= k; ++i) vs.push_back(b.add(idx("v", i)));
      b.clique(vs);
      return b.build();
    }
    case Family::UnionOfCliques: {
      Builder b;
      add_clique_parts(b, spec.sizes, nullptr);
      return b.build();
    }
    case Family::CliqueStar:
    case Family::Fan: {
      const std::vector<std::size_t> sizes =
          spec.family == Family::Fan ? std::vector<std::size_t>(k, 2) : spec.sizes;
      Builder b;
      const Vertex u = b.add("u");
      for (Vertex v : add_clique_parts(b, sizes, nullptr)) b.connect(u, v);
      return b.build();
    }
    case Family::HalfGraph: {
      Builder b;
      for (std::size_t i = 1; i <= k; ++i) b.add(idx("u", i));
      for (std::size_t j = 1; j <= k; ++j) b.add(idx("w", j));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) b.connect(i, k + j);
      }
      return b.build();
    }
    case Family::DoubleStar: {
      Builder b;
      for (std::size_t i = 0; i <= k; ++i) b.add(idx("u", i));
      for (std::size_t i = 1; i <= k; ++i) {
        const Vertex w = b.add(idx("w", i));
        b.connect(i, w);
        b.connect(0, w);
      }
      return b.build();
    }
    case Family::ThinSpider:
      return spider(k, true).build();
    case Family::ThickSpider:
      return spider(k, false).build();
    case Family::ExtendedThinSpider: {
      Builder b = spider(k, true);
      const Vertex s0 = b.add("s0");
      for (std::size_t i = 0; i + 1 < k; ++i) b.connect(s0, i);
      return b.build();
    }
    case Family::Sunlet:
      return thin_sun_graph(k, {});
    case Family::AlmostCompleteThinSun:
      return thin_sun_graph(2 * k, almost_complete_chords(k));
    case Family::ThinSun:
      return thin_sun_graph(k, spec.chords);
    case Family::Path: {
      Builder b;
      for (std::size_t i = 1; i <= k; ++i) b.add(idx("p", i));
      for (std::size_t i = 0; i + 1 < k; ++i) b.connect(i, i + 1);
      return b.build();
    }
    case Family::Cycle: {
      Builder b;
      for (std::size_t i = 1; i <= k; ++i) b.add(idx("x", i));
      for (std::size_t i = 0; i < k; ++i) b.connect(i, (i + 1) % k);
      return b.build();
    }
    case Family::Matching: {
      Builder b;
      for (std::size_t i = 1; i <= k; ++i) {
        const Vertex a = b.add(idx("a", i));
        b.connect(a, b.add(idx("b", i)));
      }
      return b.build();
    }
    case Family::Named:
      return named(spec.named);
  }
  throw std::invalid_argument("unknown family");
}

namespace {

void both(std::vector<GammaPrediction>& out, std::size_t od, std::size_t otd, const std::string& src) {
  out.push_back({CodeKind::OD, od, src});
  out.push_back({CodeKind::OTD, otd, src});
}

bool thin_sun_without_c_twins(const FamilySpec& spec) {
  return open_c_twins(generate(spec)).empty();
}

}  // namespace

std::vector<GammaPrediction> predicted_gamma(const FamilySpec& spec) {
  validate(spec);
  std::vector<GammaPrediction> out;
  const auto k = spec.k;
  switch (spec.family) {
    case Family::Clique:
      if (k >= 2) both(out, k - 1, k == 2 ? 2 : k - 1, "clique");
      break;
    case Family::Matching:
      both(out, 2 * k - 1, 2 * k, "matching");
      break;
    case Family::UnionOfCliques: {
      std::size_t twos = 0;
      std::size_t rest = 0;
      for (auto s : spec.sizes) {
        if (s == 2) {
          ++twos;
        } else {
          rest += s - 1;
        }
      }
      const std::size_t otd = 2 * twos + rest;
      if (twos > 0) {
        both(out, otd - 1, otd, "union of cliques (a)");
      } else {
        both(out, rest, otd, "union of cliques (b)");
      }
      break;
    }
    case Family::CliqueStar: {
      std::size_t ones = 0;
      std::size_t twos = 0;
      std::size_t rest = 0;
      for (auto s : spec.sizes) {
        if (s == 1) {
          ++ones;
        } else if (s == 2) {
          ++twos;
        } else {
          rest += s - 1;
        }
      }
      if (ones == 1) {
        const std::size_t l = twos + 1;
        both(out, 2 * l - 1 + rest, 2 * l - 1 + rest, "clique-star (a)");
      } else if (twos > 0) {
        both(out, 2 * twos - 1 + rest, 2 * twos + rest, "clique-star (b)");
      } else {
        both(out, rest, rest, "clique-star (c)");
      }
      break;
    }
    case Family::Fan:
      both(out, 2 * k - 1, 2 * k, "fan");
      break;
    case Family::HalfGraph:
      both(out, 2 * k - 1, 2 * k, "half-graph");
      break;
    case Family::DoubleStar:
      both(out, 2 * k - 1, 2 * k, "double star");
      break;
    case Family::ThinSpider:
      both(out, k, k, "thin headless spider");
      break;
    case Family::ThickSpider:
      both(out, k + 1, k + 1, "thick headless spider");
      break;
    case Family::ExtendedThinSpider:
      if (k >= 4) both(out, k, k + 1, "extended thin spider");
      break;
    case Family::Sunlet:
      if (k == 3) both(out, 3, 3, "thin sun T3 = net");
      if (k >= 5) both(out, k, k, "thin sun without open C-twins");
      break;
    case Family::ThinSun:
      if (k == 3) {
        both(out, 3, 3, "thin sun T3 = net");
      } else if (thin_sun_without_c_twins(spec)) {
        both(out, k, k, "thin sun without open C-twins");
      }
      break;
    case Family::AlmostCompleteThinSun:
      both(out, 3 * k - 1, 3 * k, "almost complete thin sun");
      break;
    case Family::Path:
      if (k == 2) both(out, 1, 2, "clique");
      if (k == 4) {
        out.push_back({CodeKind::OD, 3, "small graph: P4"});
        out.push_back({CodeKind::OTD, 4, "half-graph B2 = P4"});
        out.push_back({CodeKind::LTD, 2, "small graph: P4"});
      }
      if (k == 5) both(out, 3, 4, "double star D2 = P5");
      break;
    case Family::Cycle:
      break;
    case Family::Named:
      switch (spec.named) {
        case NamedGraph::Gem:
          out.push_back({CodeKind::OD, 3, "small graph: gem"});
          out.push_back({CodeKind::ID, 4, "small graph: gem"});
          break;
        case NamedGraph::GemComplement:
          out.push_back({CodeKind::OD, 5, "small graph: gem complement"});
          out.push_back({CodeKind::ID, 4, "small graph: gem complement"});
          break;
        case NamedGraph::Bull:
          out.push_back({CodeKind::OD, 3, "small graph: bull"});
          out.push_back({CodeKind::ITD, 4, "small graph: bull"});
          break;
        case NamedGraph::Bow:
          out.push_back({CodeKind::OD, 5, "small graph: bow"});
          out.push_back({CodeKind::ITD, 3, "small graph: bow"});
          break;
        case NamedGraph::TwoP2:
          out.push_back({CodeKind::OD, 3, "small graph: 2P2"});
          out.push_back({CodeKind::OTD, 4, "matching"});
          out.push_back({CodeKind::LTD, 4, "small graph: 2P2"});
          break;
        case NamedGraph::Net:
          both(out, 3, 3, "thin headless spider");
          break;
        case NamedGraph::Sun:
          both(out, 4, 4, "thick headless spider");
          break;
        case NamedGraph::P5:
          both(out, 3, 4, "double star D2 = P5");
          break;
      }
      break;
  }
  return out;
}

std::vector<VertexPair> open_c_twins(const Graph& g) {
  std::vector<Vertex> c;
  for (std::size_t i = 1;; ++i) {
    auto v = g.find_label(idx("c", i));
    if (!v) break;
    c.push_back(*v);
  }
  const bool sun = c.size() >= 3 && 2 * c.size() == g.order() &&
                   g.find_label(idx("s", c.size())).has_value();
  if (!sun) throw std::invalid_argument("open_c_twins needs a thin sun with c1..ck and s1..sk labels");
  const VertexSet cset(g.order(), c);
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (g.adjacent(c[i], c[j])) continue;
      if ((g.neighbors(c[i]) & cset) == (g.neighbors(c[j]) & cset)) {
        out.emplace_back(std::min(c[i], c[j]), std::max(c[i], c[j]));
      }
    }
  }
  return out;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (r < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph random_twin_free_graph(std::size_t n, double p, std::mt19937_64& rng, std::size_t max_tries) {
  for (std::size_t t = 0; t < max_tries; ++t) {
    Graph g = random_graph(n, p, rng);
    if (is_admissible(g, CodeKind::OTD)) return g;
  }
  throw std::runtime_error("no twin-free graph found for n=" + std::to_string(n));
}

namespace {

// Non-decreasing size lists with parts >= min_part, at least two parts, sum <= budget.
void size_lists(std::size_t budget, std::size_t min_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() >= 2) out.push_back(cur);
  const std::size_t lo = cur.empty() ? min_part : cur.back();
  for (std::size_t s = lo; s <= budget; ++s) {
    cur.push_back(s);
    size_lists(budget - s, min_part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FamilySpec> family_catalog(std::size_t max_order) {
  std::vector<FamilySpec> out;
  auto add = [&](FamilySpec spec) {
    if (expected_order(spec) <= max_order && !predicted_gamma(spec).empty()) out.push_back(std::move(spec));
  };
  for (std::size_t n = 2; n <= max_order; ++n) add(FamilySpec::clique(n));
  for (std::size_t k = 1; 2 * k <= max_order; ++k) add(FamilySpec::matching(k));
  {
    std::vector<std::vector<std::size_t>> lists;
    std::vector<std::size_t> cur;
    size_lists(max_order, 2, cur, lists);
    for (auto& l : lists) add(FamilySpec::union_of_cliques(l));
  }
  if (max_order >= 1) {
    std::vector<std::vector<std::size_t>> lists;
    std::vector<std::size_t> cur;
    size_lists(max_order - 1, 2, cur, lists);
    for (auto& l : lists) add(FamilySpec::clique_star(l));
    cur = {1};
    std::vector<std::vector<std::size_t>> with_one;
    std::function<void(std::size_t)> grow = [&](std::size_t budget) {
      if (cur.size() >= 2) with_one.push_back(cur);
      const std::size_t lo = cur.size() == 1 ? 2 : cur.back();
      for (std::size_t s = lo; s <= budget; ++s) {
        cur.push_back(s);
        grow(budget - s);
        cur.pop_back();
      }
    };
    if (max_order >= 2) grow(max_order - 2);
    for (auto& l : with_one) add(FamilySpec::clique_star(l));
  }
  for (std::size_t k = 2; 2 * k + 1 <= max_order; ++k) add(FamilySpec::fan(k));
  for (std::size_t k = 1; 2 * k <= max_order; ++k) add(FamilySpec::half_graph(k));
  for (std::size_t k = 2; 2 * k + 1 <= max_order; ++k) add(FamilySpec::double_star(k));
  for (std::size_t k = 3; 2 * k <= max_order; ++k) add(FamilySpec::thin_spider(k));
  for (std::size_t k = 3; 2 * k <= max_order; ++k) add(FamilySpec::thick_spider(k));
  for (std::size_t k = 3; 2 * k + 1 <= max_order; ++k) add(FamilySpec::extended_thin_spider(k));
  for (std::size_t k = 3; 2 * k <= max_order; ++k) add(FamilySpec::sunlet(k));
  for (std::size_t l = 3; 4 * l <= max_order; ++l) add(FamilySpec::almost_complete_thin_sun(l));
  return out;
}

}  // namespace odcode

namespace odcode {

std::vector<CorpusGraph> graph_corpus(std::size_t max_order, std::uint64_t seed) {
  std::vector<CorpusGraph> out;
  for (const auto& [name, g] : kNamedGraphs) out.push_back({std::string(name), generate(FamilySpec::named_graph(g))});
  for (std::size_t n = 1; n <= max_order; ++n) out.push_back({FamilySpec::path(n).describe(), generate(FamilySpec::path(n))});
  for (std::size_t n = 3; n <= max_order; ++n) out.push_back({FamilySpec::cycle(n).describe(), generate(FamilySpec::cycle(n))});
  for (const auto& spec : family_catalog(max_order)) out.push_back({spec.describe(), generate(spec)});
  // Every labelled graph on up to four vertices.
  for (std::size_t n = 1; n <= std::min<std::size_t>(4, max_order); ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if ((mask >> i) & 1U) edges.push_back(slots[i]);
      }
      out.push_back({"all(n=" + std::to_string(n) + ",mask=" + std::to_string(mask) + ")", Graph(n, edges)});
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; max_order >= 5 && i < 60; ++i) {
    const std::size_t n = 5 + i % (max_order - 4);
    const double p = 0.25 + 0.1 * static_cast<double>(i % 4);
    out.push_back({"random(n=" + std::to_string(n) + ",i=" + std::to_string(i) + ")", random_graph(n, p, rng)});
  }
  return out;
}

}  // namespace odcode
