#include "report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "odcode/clutter.hpp"
#include "odcode/codes.hpp"
#include "odcode/cover_solver.hpp"
#include "odcode/parallel.hpp"
#include "odcode/polyhedra.hpp"
#include "odcode/sat_reduction.hpp"

namespace odcode::cli {

namespace {

constexpr std::size_t kFamilyMaxOrder = 18;
constexpr std::size_t kOracleMaxOrder = 12;
constexpr std::size_t kRandomGraphs = 200;

std::string edges_text(const std::vector<VertexSet>& edges, std::size_t offset = 0) {
  std::string out;
  for (const auto& e : edges) out += (out.empty() ? "" : ",") + e.to_string(offset);
  return "{" + out + "}";
}

std::vector<VertexSet> sorted_sets(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end(), size_lex_less);
  return v;
}

ReportRow row(std::string table, std::string instance, std::string quantity, std::string expected,
              std::string actual) {
  const bool pass = expected == actual;
  return {std::move(table), std::move(instance), std::move(quantity), std::move(expected), std::move(actual), pass};
}

// Runs f on every item in a pool and concatenates the rows in item order.
template <class T, class F>
std::vector<ReportRow> pooled(const std::vector<T>& items, F f) {
  std::vector<std::vector<ReportRow>> parts(items.size());
  parallel_for(items.size(), [&](std::size_t i) { parts[i] = f(items[i]); });
  std::vector<ReportRow> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<ReportRow> p4_table() {
  const Graph g = generate(FamilySpec::path(4));
  const Clutter c = clutter_of(g, CodeKind::OD);
  std::vector<ReportRow> out;
  // Vertices printed 1-based, as 1-2-3-4.
  out.push_back(row("p4", "P4", "clutter(OD)", "{{1},{4},{2,3}}", edges_text(c.edge_sets(), 1)));
  out.push_back(row("p4", "P4", "F1", "{1,4}", c.f1.to_string(1)));
  out.push_back(row("p4", "P4", "gamma(OD)", "3", std::to_string(gamma(g, CodeKind::OD).value)));
  return out;
}

std::vector<ReportRow> small_graphs_table() {
  const std::vector<FamilySpec> specs = {
      FamilySpec::named_graph(NamedGraph::Gem),   FamilySpec::named_graph(NamedGraph::GemComplement),
      FamilySpec::named_graph(NamedGraph::Bull),  FamilySpec::named_graph(NamedGraph::Bow),
      FamilySpec::named_graph(NamedGraph::TwoP2), FamilySpec::path(4)};
  return pooled(specs, [](const FamilySpec& spec) {
    const Graph g = generate(spec);
    std::vector<ReportRow> out;
    for (const auto& p : predicted_gamma(spec)) {
      const auto solved = gamma(g, p.kind).value;
      const auto brute = brute_force_gamma(g, p.kind).value;
      const std::string q = "gamma(" + std::string(to_string(p.kind)) + ")";
      const std::string expected = std::to_string(p.value);
      out.push_back(row("small-graphs", spec.describe(), q + " clutter", expected, std::to_string(solved)));
      out.push_back(row("small-graphs", spec.describe(), q + " brute", expected, std::to_string(brute)));
    }
    return out;
  });
}

std::size_t spec_parameter(const FamilySpec& spec) {
  if (!spec.sizes.empty()) return *std::max_element(spec.sizes.begin(), spec.sizes.end());
  return spec.k;
}

std::vector<ReportRow> families_table(const ReportOptions& opt) {
  std::vector<FamilySpec> specs;
  for (const auto& spec : family_catalog(kFamilyMaxOrder)) {
    if (opt.max_k == 0 || spec_parameter(spec) <= opt.max_k) specs.push_back(spec);
  }
  return pooled(specs, [](const FamilySpec& spec) {
    const Graph g = generate(spec);
    std::vector<ReportRow> out;
    for (const auto& p : predicted_gamma(spec)) {
      out.push_back(row("families", spec.describe(), "gamma(" + std::string(to_string(p.kind)) + ")",
                        std::to_string(p.value), std::to_string(gamma(g, p.kind).value)));
    }
    return out;
  });
}

std::vector<ReportRow> clutters_table(const ReportOptions& opt) {
  const std::size_t max_k = opt.max_k == 0 ? 8 : opt.max_k;
  std::vector<ReportRow> out;
  auto same = [&](const std::string& instance, const std::string& what, const std::vector<VertexSet>& expected,
                  const std::vector<VertexSet>& actual) {
    out.push_back(row("clutters", instance, what, edges_text(sorted_sets(expected)), edges_text(sorted_sets(actual))));
  };
  for (std::size_t n = 2; n <= max_k; ++n) {
    const auto spec = FamilySpec::clique(n);
    same(spec.describe(), "C(OD) = R(n,2)", complete_rose(n, 2).edge_sets(),
         clutter_of(generate(spec), CodeKind::OD).edge_sets());
  }
  for (std::size_t k = 4; k <= max_k; ++k) {
    const auto spec = FamilySpec::thin_spider(k);
    const Graph g = generate(spec);
    std::vector<VertexSet> graph_edges;
    for (const auto& e : g.edges()) graph_edges.push_back(VertexSet(g.order(), {e.u, e.v}));
    same(spec.describe(), "C(OD) = edges of H_k", graph_edges, clutter_of(g, CodeKind::OD).edge_sets());
  }
  for (std::size_t k = 1; k <= max_k; ++k) {
    const auto spec = FamilySpec::half_graph(k);
    const Graph g = generate(spec);
    const std::size_t n = 2 * k;
    std::vector<VertexSet> od;
    std::vector<VertexSet> otd;
    for (Vertex v = 0; v < n; ++v) {
      otd.push_back(VertexSet(n, {v}));
      if (v != 0 && v != n - 1) od.push_back(VertexSet(n, {v}));
    }
    od.push_back(VertexSet(n, {0, n - 1}));
    same(spec.describe(), "C(OD) = singletons + {u1,wk}", od, clutter_of(g, CodeKind::OD).edge_sets());
    same(spec.describe(), "C(OTD) = 2k singletons", otd, clutter_of(g, CodeKind::OTD).edge_sets());
  }
  for (std::size_t k = 3; k <= max_k; ++k) {
    const auto spec = FamilySpec::thick_spider(k);
    const std::size_t n = 2 * k;
    std::vector<Vertex> q;
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < k; ++i) {
      q.push_back(i);
      s.push_back(k + i);
    }
    auto expected = rose_edges(n, s, k - 1);
    for (auto& e : rose_edges(n, q, 2)) expected.push_back(std::move(e));
    same(spec.describe(), "C(OD) = R(S,k-1) + R(Q,2)", expected,
         clutter_of(generate(spec), CodeKind::OD).edge_sets());
  }
  for (std::size_t k = 4; k <= max_k; ++k) {
    const auto spec = FamilySpec::extended_thin_spider(k);
    const Graph g = generate(spec);
    const Vertex sk = *g.find_label("s" + std::to_string(k));
    const auto edges = clutter_of(g, CodeKind::OD).edge_sets();
    const bool has = std::find(edges.begin(), edges.end(), VertexSet(g.order(), {sk})) != edges.end();
    out.push_back(row("clutters", spec.describe(), "{s_k} is an edge", "yes", has ? "yes" : "no"));
  }
  return out;
}

std::vector<ReportRow> relations_table(const ReportOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t i = 0; i < kRandomGraphs; ++i) {
    const std::size_t n = 4 + i % 7;
    const double p = 0.3 + 0.1 * static_cast<double>(i % 4);
    graphs.emplace_back("random#" + std::to_string(i) + "(n=" + std::to_string(n) + ")",
                        random_twin_free_graph(n, p, rng));
  }
  return pooled(graphs, [](const std::pair<std::string, Graph>& item) {
    const auto& [name, g] = item;
    std::vector<ReportRow> out;
    const RelationReport rep = check_relations(g);
    for (const auto& r : rep.relations) {
      if (r.status == RelationStatus::NotApplicable) continue;
      out.push_back(row("relations", name, r.name, "pass", std::string(to_string(r.status))));
    }
    const CoverResult all = optimal_codes(g, CodeKind::OD);
    std::size_t worst = 0;
    for (const auto& c : *all.all_optima) worst = std::max(worst, open_undominated(g, c).size());
    out.push_back(row("relations", name, "max open-undominated over optimal OD-codes <= 1", "yes",
                      worst <= 1 ? "yes" : "no (" + std::to_string(worst) + ")"));
    return out;
  });
}

std::vector<ReportRow> sat_table() {
  const auto instances = enumerate_sl_sat(4, 6);
  std::vector<std::size_t> ids(instances.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return pooled(ids, [&](std::size_t i) {
    const auto& psi = instances[i];
    const RoundTripReport r = sat_roundtrip(psi);
    const std::string name = "sl-sat#" + std::to_string(i) + "(n=" + std::to_string(psi.n_vars) +
                             ",m=" + std::to_string(psi.clauses.size()) + ")";
    const std::string verdict = r.satisfiable ? "sat" : "unsat";
    std::string actual = "gamma(OD)=" + std::to_string(r.gamma_od) + " gamma(OTD)=" + std::to_string(r.gamma_otd);
    std::string expected = r.satisfiable ? "gamma(OD)=" + std::to_string(r.od_target) +
                                               " gamma(OTD)=" + std::to_string(r.otd_target)
                                         : actual;
    std::vector<ReportRow> out;
    out.push_back(row("sat", name, verdict + " targets", expected, actual));
    if (!r.satisfiable) out.back().pass = r.gamma_od >= r.od_target + 1 && r.gamma_otd >= r.otd_target;
    out.push_back(row("sat", name, "all reduction checks", "ok", r.ok() ? "ok" : "FAIL"));
    return out;
  });
}

std::vector<ReportRow> roses_table() {
  std::vector<ReportRow> out;
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::size_t q = 2; q < n; ++q) {
      const std::string name = "R(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")";
      const std::string expected = std::to_string(n - q + 1);
      out.push_back(row("roses", name, "tau by solver", expected, std::to_string(min_cover(complete_rose(n, q)).value)));
      out.push_back(row("roses", name, "0/1 optimum of rank system", expected,
                        std::to_string(system_optimum(qrose_system(n, q)))));
    }
  }
  return out;
}

std::vector<ReportRow> polyhedra_table() {
  std::vector<std::pair<FamilySpec, FamilyHint>> cases;
  for (std::size_t n = 2; n <= 5; ++n) cases.emplace_back(FamilySpec::clique(n), FamilyHint::Clique);
  for (std::size_t k = 1; k <= 3; ++k) cases.emplace_back(FamilySpec::matching(k), FamilyHint::Matching);
  for (std::size_t k = 1; k <= 5; ++k) cases.emplace_back(FamilySpec::half_graph(k), FamilyHint::HalfGraph);
  cases.emplace_back(FamilySpec::thin_spider(4), FamilyHint::ThinSpider);
  cases.emplace_back(FamilySpec::thick_spider(4), FamilyHint::ThickSpider);
  cases.emplace_back(FamilySpec::extended_thin_spider(4), FamilyHint::ExtendedThinSpider);
  cases.emplace_back(FamilySpec::sunlet(5), FamilyHint::Sunlet);
  cases.emplace_back(FamilySpec::almost_complete_thin_sun(3), FamilyHint::AlmostCompleteThinSun);
  cases.emplace_back(FamilySpec::fan(3), FamilyHint::Fan);
  return pooled(cases, [](const std::pair<FamilySpec, FamilyHint>& item) {
    const Graph g = generate(item.first);
    const Clutter c = clutter_of(g, CodeKind::OD);
    const ConstraintSystem sys = od_polyhedron_system(g, item.second);
    const std::string name = item.first.describe();
    std::vector<ReportRow> out;
    const auto valid = check_validity(sys, c);
    out.push_back(row("polyhedra", name, "valid over all covers", "yes", valid.valid ? "yes" : "no"));
    const auto tight = check_tightness(sys, c);
    out.push_back(row("polyhedra", name, "inequalities never tight", "0", std::to_string(tight.never_tight().size())));
    const auto hull = integer_hull_equiv(sys, c);
    out.push_back(row("polyhedra", name, "0/1 points = covers", "yes", hull.equivalent ? "yes" : "no"));
    return out;
  });
}

std::vector<ReportRow> oracle_table(const ReportOptions& opt) {
  const auto corpus = graph_corpus(kOracleMaxOrder, opt.seed);
  return pooled(corpus, [](const CorpusGraph& item) {
    std::vector<ReportRow> out;
    for (CodeKind k : kAllKinds) {
      if (!is_admissible(item.graph, k)) continue;
      out.push_back(row("oracle", item.name, "gamma(" + std::string(to_string(k)) + ") clutter vs brute",
                        std::to_string(brute_force_gamma(item.graph, k).value),
                        std::to_string(gamma(item.graph, k).value)));
    }
    return out;
  });
}

}  // namespace

const std::vector<std::string>& report_tables() {
  static const std::vector<std::string> tables = {"p4",  "small-graphs", "families",  "clutters", "relations",
                                                  "sat", "roses",        "polyhedra", "oracle"};
  return tables;
}

std::vector<ReportRow> build_report(const std::string& table, const ReportOptions& opt) {
  if (table == "all") {
    std::vector<ReportRow> out;
    for (const auto& t : report_tables()) {
      auto rows = build_report(t, opt);
      out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
  }
  if (table == "p4") return p4_table();
  if (table == "small-graphs") return small_graphs_table();
  if (table == "families") return families_table(opt);
  if (table == "clutters") return clutters_table(opt);
  if (table == "relations") return relations_table(opt);
  if (table == "sat") return sat_table();
  if (table == "roses") return roses_table();
  if (table == "polyhedra") return polyhedra_table();
  if (table == "oracle") return oracle_table(opt);
  throw std::invalid_argument("unknown report table '" + table + "'");
}

}  // namespace odcode::cli
