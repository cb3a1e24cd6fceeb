#include "odcode/codes.hpp"

#include <sstream>
#include <stdexcept>

#include "odcode/clutter.hpp"
#include "odcode/errors.hpp"

namespace odcode {

namespace {

VertexSet trace(const Graph& g, Vertex v, const VertexSet& code, bool closed) {
  VertexSet t = g.neighbors(v) & code;
  if (closed && code.test(v)) t.set(v);
  return t;
}

void check_universe(const Graph& g, const VertexSet& code) {
  if (code.universe() != g.order()) {
    throw std::invalid_argument("code universe " + std::to_string(code.universe()) +
                                " does not match graph order " + std::to_string(g.order()));
  }
}

// Calls on_undominated / on_unseparated for each violation until one returns false.
template <class OnDom, class OnSep>
void scan(const Graph& g, const VertexSet& code, CodeKind kind, OnDom on_undominated,
          OnSep on_unseparated) {
  const std::size_t n = g.order();
  const bool closed_dom = domination(kind) == Domination::Closed;
  for (Vertex v = 0; v < n; ++v) {
    const bool dominated = g.neighbors(v).intersects(code) || (closed_dom && code.test(v));
    if (!dominated && !on_undominated(v)) return;
  }
  const Separation sep = separation(kind);
  std::vector<VertexSet> traces;
  traces.reserve(n);
  for (Vertex v = 0; v < n; ++v) traces.push_back(trace(g, v, code, sep == Separation::Closed));
  for (Vertex u = 0; u < n; ++u) {
    if (sep == Separation::Locating && code.test(u)) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (sep == Separation::Locating && code.test(v)) continue;
      if (traces[u] == traces[v] && !on_unseparated(u, v, traces[u])) return;
    }
  }
}

}  // namespace

VerificationReport verify(const Graph& g, const VertexSet& code, CodeKind kind) {
  check_universe(g, code);
  VerificationReport r;
  r.kind = kind;
  std::size_t seen = 0;
  auto room = [&]() {
    if (++seen > kMaxReportedViolations) {
      r.truncated = true;
      return false;
    }
    return true;
  };
  scan(
      g, code, kind,
      [&](Vertex v) {
        r.valid = false;
        if (!room()) return false;
        r.undominated.push_back(v);
        return true;
      },
      [&](Vertex u, Vertex v, const VertexSet& t) {
        r.valid = false;
        if (!room()) return false;
        r.unseparated.push_back({u, v, t});
        return true;
      });
  return r;
}

bool is_code(const Graph& g, const VertexSet& code, CodeKind kind) {
  check_universe(g, code);
  bool ok = true;
  scan(
      g, code, kind, [&](Vertex) { return ok = false; },
      [&](Vertex, Vertex, const VertexSet&) { return ok = false; });
  return ok;
}

std::vector<Vertex> open_undominated(const Graph& g, const VertexSet& code) {
  check_universe(g, code);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!g.neighbors(v).intersects(code)) out.push_back(v);
  }
  return out;
}

GammaResult gamma(const Graph& g, CodeKind kind) {
  const Clutter c = clutter_of(g, kind);
  const CoverResult r = min_cover(c);
  if (!is_code(g, r.witness, kind)) {
    throw std::logic_error("minimum cover is not a " + std::string(to_string(kind)) + "-code");
  }
  return {r.value, r.witness};
}

CoverResult optimal_codes(const Graph& g, CodeKind kind, std::size_t cap) {
  return min_cover(clutter_of(g, kind), true, cap);
}

GammaResult brute_force_gamma(const Graph& g, CodeKind kind) {
  const std::size_t n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw std::invalid_argument("brute force limited to " + std::to_string(kBruteForceMaxOrder) +
                                " vertices");
  }
  if (!is_code(g, VertexSet::full(n), kind)) {
    throw InadmissibleGraph("no " + std::string(to_string(kind)) + "-code exists");
  }
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::size_t k = 0; k <= n; ++k) {
    std::uint32_t mask = k == 0 ? 0 : (std::uint32_t{1} << k) - 1;
    while (mask < limit) {
      VertexSet s(n);
      for (std::size_t v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) s.set(v);
      }
      if (is_code(g, s, kind)) return {k, s};
      if (mask == 0) break;
      // Next mask with the same popcount.
      const std::uint32_t c = mask & (~mask + 1);
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  throw std::logic_error("unreachable: full vertex set is a code");
}

std::string_view to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::Pass:
      return "pass";
    case RelationStatus::Fail:
      return "FAIL";
    case RelationStatus::NotApplicable:
      return "n/a";
  }
  return "?";
}

bool RelationReport::ok() const {
  for (const auto& r : relations) {
    if (r.status == RelationStatus::Fail) return false;
  }
  return true;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t t = 0;
  while ((std::size_t{1} << t) < n) ++t;
  return t;
}

namespace {

Relation make(std::string name, bool applicable, bool holds, std::string detail) {
  Relation r{std::move(name), RelationStatus::NotApplicable, std::move(detail)};
  if (applicable) r.status = holds ? RelationStatus::Pass : RelationStatus::Fail;
  return r;
}

}  // namespace

RelationReport check_relations(const Graph& g) {
  if (auto a = is_admissible(g, CodeKind::OD); !a) throw InadmissibleGraph(a.reason);
  RelationReport rep;
  const std::size_t n = g.order();
  const auto isolated = isolated_vertices(g);
  const bool no_isolated = isolated.empty();

  const GammaResult od = gamma(g, CodeKind::OD);
  rep.od_witness = od.witness;
  rep.gammas[CodeKind::OD] = od.value;
  rep.gammas[CodeKind::LD] = gamma(g, CodeKind::LD).value;
  if (no_isolated) {
    rep.gammas[CodeKind::OTD] = gamma(g, CodeKind::OTD).value;
    rep.gammas[CodeKind::LTD] = gamma(g, CodeKind::LTD).value;
  }
  const std::size_t g_od = od.value;
  auto show = [](std::initializer_list<std::pair<const char*, std::size_t>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
      os << (first ? "" : " ") << k << '=' << v;
      first = false;
    }
    return os.str();
  };

  {
    const bool app = no_isolated && n >= 2;
    const std::size_t lo = ceil_log2(n);
    rep.relations.push_back(make("log-lower-bound", app, lo <= g_od,
                                 app ? show({{"ceil_log2_n", lo}, {"od", g_od}}) : "needs n >= 2 and no isolated vertex"));
    rep.relations.push_back(make("order-upper-bound", app, app && g_od <= n - 1,
                                 app ? show({{"od", g_od}, {"n_minus_1", n - 1}}) : "needs n >= 2 and no isolated vertex"));
  }
  if (no_isolated) {
    const std::size_t otd = rep.gammas[CodeKind::OTD];
    rep.relations.push_back(
        make("otd-od-sandwich", true, otd <= g_od + 1 && g_od <= otd, show({{"otd", otd}, {"od", g_od}})));
  } else {
    rep.relations.push_back(make("otd-od-sandwich", false, false, "needs no isolated vertex"));
  }
  if (isolated.size() == 1) {
    const Graph rest = remove_vertex(g, isolated.front());
    const std::size_t otd_rest = rest.order() == 0 ? 0 : gamma(rest, CodeKind::OTD).value;
    rep.relations.push_back(make("isolated-vertex-identity", true, g_od == otd_rest + 1,
                                 show({{"od", g_od}, {"otd_without_isolated", otd_rest}})));
  } else {
    rep.relations.push_back(make("isolated-vertex-identity", false, false, "needs exactly one isolated vertex"));
  }
  {
    const std::size_t ld = rep.gammas[CodeKind::LD];
    rep.relations.push_back(make("ld-le-od", true, ld <= g_od, show({{"ld", ld}, {"od", g_od}})));
  }
  if (no_isolated) {
    const std::size_t ltd = rep.gammas[CodeKind::LTD];
    rep.relations.push_back(make("ltd-minus-one-le-od", true, ltd <= g_od + 1, show({{"ltd", ltd}, {"od", g_od}})));
  } else {
    rep.relations.push_back(make("ltd-minus-one-le-od", false, false, "needs no isolated vertex"));
  }
  {
    const std::size_t k = open_undominated(g, od.witness).size();
    rep.relations.push_back(make("single-empty-open-trace", true, k <= 1,
                                 show({{"open_undominated_in_witness", k}})));
  }
  return rep;
}

}  // namespace odcode
