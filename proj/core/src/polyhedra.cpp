#include "odcode/polyhedra.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "odcode/cover_solver.hpp"
#include "odcode/families.hpp"
#include "odcode/parallel.hpp"

namespace odcode {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const VertexSet& s) {
  if (s.universe() > 64) throw std::invalid_argument("bitmask path limited to 64 vertices");
  return s.words().empty() ? 0 : s.words()[0];
}

VertexSet from_mask(std::size_t n, Mask m) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) {
    if ((m >> v) & 1U) s.set(v);
  }
  return s;
}

class Builder {
 public:
  Builder(std::size_t n, std::string family) { sys_.n = n, sys_.family = std::move(family); }

  void equality(Vertex v) { sys_.equalities.push_back(v); }

  void add(const std::vector<Vertex>& support, std::size_t rhs, const std::string& provenance) {
    VertexSet s(sys_.n, support);
    if (!seen_.insert({to_mask(s), rhs}).second) return;
    sys_.inequalities.push_back({std::move(s), rhs, provenance});
  }

  // x(V') >= |V'| - q + 1 for all V' within members with |V'| >= q.
  void rose(const std::vector<Vertex>& members, std::size_t q, const std::string& provenance) {
    const std::size_t m = members.size();
    for (std::size_t size = q; size <= m; ++size) {
      std::vector<bool> pick(m, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
      do {
        std::vector<Vertex> support;
        for (std::size_t i = 0; i < m; ++i) {
          if (pick[i]) support.push_back(members[i]);
        }
        add(support, size - q + 1, provenance);
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }

  ConstraintSystem take() { return std::move(sys_); }

 private:
  ConstraintSystem sys_;
  std::set<std::pair<Mask, std::size_t>> seen_;
};

std::vector<Vertex> range(std::size_t from, std::size_t to) {
  std::vector<Vertex> out;
  for (std::size_t v = from; v < to; ++v) out.push_back(v);
  return out;
}

void require_generated(const Graph& g, const FamilySpec& spec) {
  Graph expected;
  try {
    expected = generate(spec);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("graph does not match " + spec.describe() + ": " + e.what());
  }
  if (!g.same_structure(expected) || g.labels() != expected.labels()) {
    throw std::invalid_argument("graph does not match " + spec.describe() +
                                " (edges or role labels differ from the generator)");
  }
}

std::size_t exact_half(const Graph& g, std::size_t parts, std::size_t extra, FamilyHint hint) {
  const std::size_t n = g.order();
  if (n < extra || (n - extra) % parts != 0) {
    throw std::invalid_argument("order " + std::to_string(n) + " does not fit family " +
                                std::string(hint_name(hint)));
  }
  return (n - extra) / parts;
}

std::vector<Mask> edge_masks(const Clutter& c) {
  std::vector<Mask> out;
  for (const auto& e : c.edges) out.push_back(to_mask(e.members));
  return out;
}

bool covers(Mask x, const std::vector<Mask>& edges) {
  return std::all_of(edges.begin(), edges.end(), [x](Mask e) { return (x & e) != 0; });
}

struct CompiledSystem {
  Mask forced = 0;
  std::vector<Mask> supports;
  std::vector<std::size_t> rhs;

  explicit CompiledSystem(const ConstraintSystem& sys) {
    for (Vertex v : sys.equalities) forced |= Mask{1} << v;
    for (const auto& r : sys.inequalities) {
      supports.push_back(to_mask(r.support));
      rhs.push_back(r.rhs);
    }
  }

  bool ok(Mask x) const {
    if ((x & forced) != forced) return false;
    for (std::size_t i = 0; i < supports.size(); ++i) {
      if (static_cast<std::size_t>(__builtin_popcountll(x & supports[i])) < rhs[i]) return false;
    }
    return true;
  }
};

void check_sizes(const ConstraintSystem& sys, const Clutter& c) {
  if (sys.n != c.n) {
    throw std::invalid_argument("system has " + std::to_string(sys.n) + " variables, clutter has " +
                                std::to_string(c.n) + " vertices");
  }
  if (sys.n > 64) throw std::invalid_argument("polyhedral checks limited to 64 vertices");
}

std::vector<Mask> all_covers(const Clutter& c) {
  const auto edges = edge_masks(c);
  std::vector<Mask> out;
  for (Mask x = 0; x < (Mask{1} << c.n); ++x) {
    if (covers(x, edges)) out.push_back(x);
  }
  return out;
}

std::vector<Mask> minimum_covers(const Clutter& c) {
  const CoverResult r = min_cover(c, true);
  std::vector<Mask> out;
  for (const auto& s : *r.all_optima) out.push_back(to_mask(s));
  return out;
}

}  // namespace

ConstraintSystem qrose_system(std::size_t n, std::size_t q) {
  if (q < 2 || q >= n) throw std::invalid_argument("q-rose system needs 2 <= q < n");
  if (n > 64) throw std::invalid_argument("q-rose system limited to 64 vertices");
  Builder b(n, "rose(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")");
  b.rose(range(0, n), q, "rose");
  return b.take();
}

std::string_view hint_name(FamilyHint h) {
  switch (h) {
    case FamilyHint::Clique: return "clique";
    case FamilyHint::Matching: return "matching";
    case FamilyHint::Fan: return "fan";
    case FamilyHint::HalfGraph: return "half-graph";
    case FamilyHint::ThickSpider: return "thick-spider";
    case FamilyHint::ThinSpider: return "thin-spider";
    case FamilyHint::ExtendedThinSpider: return "extended-thin-spider";
    case FamilyHint::Sunlet: return "sunlet";
    case FamilyHint::AlmostCompleteThinSun: return "almost-complete-thin-sun";
    case FamilyHint::Generic: return "generic";
  }
  return "generic";
}

std::optional<FamilyHint> hint_from_name(std::string_view name) {
  for (auto h : {FamilyHint::Clique, FamilyHint::Matching, FamilyHint::Fan, FamilyHint::HalfGraph,
                 FamilyHint::ThickSpider, FamilyHint::ThinSpider, FamilyHint::ExtendedThinSpider,
                 FamilyHint::Sunlet, FamilyHint::AlmostCompleteThinSun, FamilyHint::Generic}) {
    if (hint_name(h) == name) return h;
  }
  return std::nullopt;
}

ConstraintSystem od_polyhedron_system(const Graph& g, FamilyHint hint) {
  const std::size_t n = g.order();
  if (n > 64) throw std::invalid_argument("polyhedron systems limited to 64 vertices");
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(std::string(hint_name(hint)) + " system needs " + what);
  };
  switch (hint) {
    case FamilyHint::Clique: {
      need(n >= 2, "n >= 2");
      const auto spec = FamilySpec::clique(n);
      require_generated(g, spec);
      Builder b(n, spec.describe());
      b.rose(range(0, n), 2, "rose(V,2)");
      return b.take();
    }
    case FamilyHint::Matching: {
      const std::size_t k = exact_half(g, 2, 0, hint);
      need(k >= 1, "k >= 1");
      const auto spec = FamilySpec::matching(k);
      require_generated(g, spec);
      Builder b(n, spec.describe());
      b.rose(range(0, n), 2, "rose(V,2)");
      return b.take();
    }
    case FamilyHint::Fan: {
      const std::size_t k = exact_half(g, 2, 1, hint);
      need(k >= 2, "k >= 2");
      const auto spec = FamilySpec::fan(k);
      require_generated(g, spec);
      Builder b(n, spec.describe());
      b.rose(range(1, n), 2, "rose(W2,2)");
      return b.take();
    }
    case FamilyHint::HalfGraph: {
      const std::size_t k = exact_half(g, 2, 0, hint);
      need(k >= 1, "k >= 1");
      const auto spec = FamilySpec::half_graph(k);
      require_generated(g, spec);
      Builder b(n, spec.describe());
      for (Vertex v = 1; v + 1 < n; ++v) b.equality(v);
      b.add({0, n - 1}, 1, "hyperedge");
      return b.take();
    }
    case FamilyHint::ThickSpider: {
      const std::size_t k = exact_half(g, 2, 0, hint);
      need(k >= 4, "k >= 4");
      const auto spec = FamilySpec::thick_spider(k);
      require_generated(g, spec);
      Builder b(n, spec.describe());
      b.rose(range(k, 2 * k), k - 1, "rose(S,k-1)");
      b.rose(range(0, k), 2, "rose(Q,2)");
      return b.take();
    }
    case FamilyHint::ThinSpider:
    case FamilyHint::ExtendedThinSpider: {
      const bool extended = hint == FamilyHint::ExtendedThinSpider;
      const std::size_t k = exact_half(g, 2, extended ? 1 : 0, hint);
      need(k >= 4, "k >= 4");
      const auto spec = extended ? FamilySpec::extended_thin_spider(k) : FamilySpec::thin_spider(k);
      require_generated(g, spec);
      Builder b(n, spec.describe());
      if (extended) b.equality(2 * k - 1);
      for (std::size_t i = 0; i < k; ++i) {
        if (extended && i + 1 == k) continue;
        b.add({i, k + i}, 1, "leg");
      }
      b.rose(range(0, k), 2, "rose(Q,2)");
      return b.take();
    }
    case FamilyHint::Sunlet: {
      const std::size_t k = exact_half(g, 2, 0, hint);
      need(k >= 5, "k >= 5");
      const auto spec = FamilySpec::sunlet(k);
      require_generated(g, spec);
      Builder b(n, spec.describe());
      for (std::size_t i = 0; i < k; ++i) {
        b.rose({(i + k - 1) % k, i, (i + 1) % k, k + i}, 2, "rose(N[c]+s,2)");
      }
      b.rose(range(0, k), 2, "rose(C,2)");
      return b.take();
    }
    case FamilyHint::AlmostCompleteThinSun: {
      const std::size_t l = exact_half(g, 4, 0, hint);
      need(l >= 3, "l >= 3");
      const auto spec = FamilySpec::almost_complete_thin_sun(l);
      require_generated(g, spec);
      const std::size_t k = 2 * l;
      Builder b(n, spec.describe());
      for (std::size_t i = 0; i < l; ++i) b.add({k + i, k + i + l}, 1, "antipodal-legs");
      for (std::size_t i = 0; i < k; ++i) b.add({i, k + i}, 1, "leg");
      b.rose(range(0, k), 2, "rose(C,2)");
      return b.take();
    }
    case FamilyHint::Generic: {
      const Clutter c = clutter_of(g, CodeKind::OD);
      Builder b(n, "generic");
      c.f1.for_each([&](Vertex v) { b.equality(v); });
      for (const auto& e : c.f2) b.add(e.to_vector(), 1, "hyperedge");
      return b.take();
    }
  }
  throw std::invalid_argument("unknown family hint");
}

std::optional<std::size_t> first_violation(const ConstraintSystem& sys, const VertexSet& x) {
  for (std::size_t i = 0; i < sys.equalities.size(); ++i) {
    if (!x.test(sys.equalities[i])) return i;
  }
  for (std::size_t i = 0; i < sys.inequalities.size(); ++i) {
    const auto& r = sys.inequalities[i];
    if (r.support.intersection_count(x) < r.rhs) return sys.equalities.size() + i;
  }
  return std::nullopt;
}

bool satisfies(const ConstraintSystem& sys, const VertexSet& x) { return !first_violation(sys, x); }

std::string describe_constraint(const ConstraintSystem& sys, std::size_t index, const Graph* g) {
  auto name = [&](Vertex v) { return g ? g->label_or_index(v) : std::to_string(v); };
  if (index < sys.equalities.size()) return "x_" + name(sys.equalities[index]) + " = 1";
  const auto& r = sys.inequalities.at(index - sys.equalities.size());
  std::string out;
  r.support.for_each([&](Vertex v) { out += (out.empty() ? "x_" : " + x_") + name(v); });
  return out + " >= " + std::to_string(r.rhs);
}

bool TightnessReport::all_tight() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.has_value(); });
}

std::vector<std::size_t> TightnessReport::never_tight() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (!witnesses[i]) out.push_back(i);
  }
  return out;
}

ValidityReport check_validity(const ConstraintSystem& sys, const Clutter& c) {
  check_sizes(sys, c);
  ValidityReport rep;
  rep.exhaustive = c.n <= kExhaustiveMaxOrder;
  const auto points = rep.exhaustive ? all_covers(c) : minimum_covers(c);
  const CompiledSystem compiled(sys);
  rep.covers_checked = points.size();
  for (Mask x : points) {
    if (compiled.ok(x)) continue;
    rep.valid = false;
    rep.counterexample = from_mask(c.n, x);
    rep.violated = first_violation(sys, *rep.counterexample);
    break;
  }
  return rep;
}

TightnessReport check_tightness(const ConstraintSystem& sys, const Clutter& c) {
  check_sizes(sys, c);
  const CompiledSystem compiled(sys);
  TightnessReport rep;
  rep.witnesses.assign(sys.inequalities.size(), std::nullopt);
  auto scan = [&](const std::vector<Mask>& points) {
    parallel_for(sys.inequalities.size(), [&](std::size_t i) {
      if (rep.witnesses[i]) return;
      for (Mask x : points) {
        if (static_cast<std::size_t>(__builtin_popcountll(x & compiled.supports[i])) == compiled.rhs[i]) {
          rep.witnesses[i] = from_mask(c.n, x);
          return;
        }
      }
    });
  };
  scan(minimum_covers(c));
  if (!rep.all_tight() && c.n <= kExhaustiveMaxOrder) scan(all_covers(c));
  return rep;
}

HullReport integer_hull_equiv(const ConstraintSystem& sys, const Clutter& c, std::size_t n_max) {
  check_sizes(sys, c);
  if (c.n > n_max) {
    throw std::invalid_argument("integer hull check limited to " + std::to_string(n_max) + " vertices");
  }
  const CompiledSystem compiled(sys);
  const auto edges = edge_masks(c);
  HullReport rep;
  for (Mask x = 0; x < (Mask{1} << c.n); ++x) {
    ++rep.points;
    const bool cover = covers(x, edges);
    if (cover != compiled.ok(x)) {
      rep.equivalent = false;
      rep.mismatch = from_mask(c.n, x);
      rep.mismatch_is_cover = cover;
      break;
    }
  }
  return rep;
}

std::size_t system_optimum(const ConstraintSystem& sys) {
  if (sys.n > 24) throw std::invalid_argument("system optimum enumeration limited to 24 variables");
  const CompiledSystem compiled(sys);
  const std::size_t n = sys.n;
  for (std::size_t size = 0; size <= n; ++size) {
    if (size == 0) {
      if (compiled.ok(0)) return 0;
      continue;
    }
    Mask x = (Mask{1} << size) - 1;
    while (x < (Mask{1} << n)) {
      if (compiled.ok(x)) return size;
      const Mask lowest = x & (~x + 1);
      const Mask ripple = x + lowest;
      x = (((ripple ^ x) >> 2) / lowest) | ripple;
    }
  }
  throw std::invalid_argument("constraint system has no 0/1 point");
}

}  // namespace odcode
