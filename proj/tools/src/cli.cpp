#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "odcode/clutter.hpp"
#include "odcode/codes.hpp"
#include "odcode/cover_solver.hpp"
#include "odcode/errors.hpp"
#include "odcode/families.hpp"
#include "odcode/graph_io.hpp"
#include "odcode/polyhedra.hpp"
#include "odcode/sat_reduction.hpp"
#include "report.hpp"

namespace odcode::cli {

namespace {

using json = nlohmann::ordered_json;

// Input problems (bad files, malformed text) map to the usage status.
struct CliError {
  int code;
  std::string message;
  std::string rule;
};

json set_json(const VertexSet& s) { return s.to_vector(); }

json sets_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(set_json(s));
  return out;
}

json envelope(const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  try {
    return read_file(path);
  } catch (const std::exception& e) {
    throw CliError{kExitUsage, e.what(), "io"};
  }
}

Graph load(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw CliError{kExitUsage, path + ": " + e.what(), "graph-format"};
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitUsage, path + ": " + e.what(), "graph-format"};
  }
}

LsatInstance load_lsat(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return parse_lsat(text);
  } catch (const LsatError& e) {
    throw CliError{kExitUsage, path + ": " + e.what(), e.rule()};
  }
}

CodeKind kind_of(const std::string& name) {
  auto k = parse_kind(name);
  if (!k) throw CliError{kExitUsage, "unknown code kind '" + name + "'", "usage"};
  return *k;
}

std::size_t to_count(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-') {
    throw CliError{kExitUsage, "bad " + what + " '" + text + "'", "usage"};
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

// "k=4", "sizes=2:3:3", "chords=0-2:1-3"; n and l are aliases of k.
FamilySpec family_spec(const std::string& family, const std::string& params) {
  auto spec = family_from_name(family);
  if (!spec) throw CliError{kExitUsage, "unknown family '" + family + "'", "usage"};
  for (const auto& item : split(params, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw CliError{kExitUsage, "parameter '" + item + "' lacks '='", "usage"};
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "k" || key == "n" || key == "l") {
      spec->k = to_count(value, key);
    } else if (key == "sizes") {
      spec->sizes.clear();
      for (const auto& s : split(value, ':')) spec->sizes.push_back(to_count(s, "size"));
    } else if (key == "chords") {
      spec->chords.clear();
      for (const auto& c : split(value, ':')) {
        const auto parts = split(c, '-');
        if (parts.size() != 2) throw CliError{kExitUsage, "chord '" + c + "' is not i-j", "usage"};
        spec->chords.emplace_back(to_count(parts[0], "chord end"), to_count(parts[1], "chord end"));
      }
    } else {
      throw CliError{kExitUsage, "unknown parameter '" + key + "'", "usage"};
    }
  }
  try {
    validate(*spec);
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitUsage, e.what(), "family-parameters"};
  }
  return *spec;
}

VertexSet parse_code(const std::string& text, std::size_t n) {
  VertexSet s(n);
  for (const auto& item : split(text, ',')) {
    const std::size_t v = to_count(item, "vertex");
    if (v >= n) throw CliError{kExitUsage, "code vertex " + item + " out of range", "usage"};
    s.set(v);
  }
  return s;
}

struct Context {
  std::ostream& out;
  bool json_mode = false;
};

int cmd_generate(Context& ctx, const std::string& family, const std::string& params) {
  const Graph g = generate(family_spec(family, params));
  ctx.out << (ctx.json_mode ? format_graph_json(g) : format_graph_text(g));
  return kExitOk;
}

int cmd_clutter(Context& ctx, const std::string& path, const std::string& kind_name) {
  const Graph g = load(path);
  const CodeKind kind = kind_of(kind_name);
  const Clutter c = clutter_of(g, kind);
  if (ctx.json_mode) {
    json j = envelope("clutter");
    j["kind"] = std::string(to_string(kind));
    j["clutter"] = json::parse(clutter_to_json(c));
    ctx.out << j.dump() << '\n';
    return kExitOk;
  }
  ctx.out << "kind: " << to_string(kind) << '\n'
          << "ground: " << c.ground.to_string() << '\n'
          << "v0: " << c.v0.to_string() << '\n'
          << "f1: " << c.f1.to_string() << '\n'
          << "f2:";
  for (const auto& e : c.f2) ctx.out << ' ' << e.to_string();
  ctx.out << '\n' << "edges: " << c.edges.size() << '\n';
  return kExitOk;
}

int cmd_gamma(Context& ctx, const std::string& path, const std::string& kind_name, bool enumerate,
              std::size_t cap) {
  const Graph g = load(path);
  const CodeKind kind = kind_of(kind_name);
  if (cap == 0) throw CliError{kExitUsage, "--cap must be positive", "usage"};
  CoverResult r = enumerate ? optimal_codes(g, kind, cap) : CoverResult{};
  if (!enumerate) {
    const GammaResult gr = gamma(g, kind);
    r.value = gr.value;
    r.witness = gr.witness;
  }
  if (ctx.json_mode) {
    json j = envelope("gamma");
    j["kind"] = std::string(to_string(kind));
    j["value"] = r.value;
    j["witness"] = set_json(r.witness);
    if (r.all_optima) {
      j["optima"] = sets_json(*r.all_optima);
      j["truncated"] = r.truncated;
    }
    ctx.out << j.dump() << '\n';
    return kExitOk;
  }
  ctx.out << r.value << '\n' << "witness: " << r.witness.to_string() << '\n';
  if (r.all_optima) {
    ctx.out << "optima: " << r.all_optima->size() << (r.truncated ? " (truncated)" : "") << '\n';
    for (const auto& s : *r.all_optima) ctx.out << "  " << s.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_verify(Context& ctx, const std::string& path, const std::string& kind_name, const std::string& code_text) {
  const Graph g = load(path);
  const CodeKind kind = kind_of(kind_name);
  const VertexSet code = parse_code(code_text, g.order());
  const VerificationReport rep = verify(g, code, kind);
  if (ctx.json_mode) {
    json j = envelope("verify");
    j["kind"] = std::string(to_string(kind));
    j["code"] = set_json(code);
    j["valid"] = rep.valid;
    j["undominated"] = rep.undominated;
    json pairs = json::array();
    for (const auto& p : rep.unseparated) pairs.push_back({{"u", p.u}, {"v", p.v}, {"trace", set_json(p.trace)}});
    j["unseparated"] = std::move(pairs);
    j["truncated"] = rep.truncated;
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << (rep.valid ? "valid" : "invalid") << ' ' << to_string(kind) << "-code of size " << code.count()
            << '\n';
    for (Vertex v : rep.undominated) ctx.out << "undominated: " << v << '\n';
    for (const auto& p : rep.unseparated) {
      ctx.out << "unseparated: " << p.u << ' ' << p.v << " trace " << p.trace.to_string() << '\n';
    }
    if (rep.truncated) ctx.out << "(more violations not shown)\n";
  }
  return rep.valid ? kExitOk : kExitFail;
}

int cmd_relations(Context& ctx, const std::string& path) {
  const Graph g = load(path);
  const RelationReport rep = check_relations(g);
  if (ctx.json_mode) {
    json j = envelope("relations");
    json gammas = json::object();
    for (const auto& [k, v] : rep.gammas) gammas[std::string(to_string(k))] = v;
    j["gammas"] = std::move(gammas);
    json rel = json::array();
    for (const auto& r : rep.relations) {
      rel.push_back({{"name", r.name}, {"status", std::string(to_string(r.status))}, {"detail", r.detail}});
    }
    j["relations"] = std::move(rel);
    j["ok"] = rep.ok();
    ctx.out << j.dump() << '\n';
  } else {
    for (const auto& [k, v] : rep.gammas) ctx.out << "gamma(" << to_string(k) << ") = " << v << '\n';
    for (const auto& r : rep.relations) {
      ctx.out << std::left << std::setw(28) << r.name << std::setw(6) << to_string(r.status) << r.detail << '\n';
    }
  }
  return rep.ok() ? kExitOk : kExitFail;
}

int cmd_reduce_sat(Context& ctx, const std::string& path, const std::string& graph_out,
                   const std::string& roles_out) {
  const LsatInstance raw = load_lsat(path);
  const LsatInstance psi = raw.saturated ? raw : saturate(raw);
  GadgetGraph gg;
  try {
    gg = build_gadget(psi);
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitUsage, e.what(), "gadget"};
  }
  if (!graph_out.empty()) write_file(graph_out, format_graph_text(gg.graph));
  if (!roles_out.empty()) write_file(roles_out, gadget_roles_json(gg));
  if (ctx.json_mode) {
    json j = envelope("reduce-sat");
    j["saturated_input"] = raw.saturated;
    j["n_vars"] = gg.n_vars;
    j["n_clauses"] = gg.n_clauses;
    j["vertices"] = gg.graph.order();
    j["edges"] = gg.graph.edge_count();
    j["od_target"] = gg.od_target();
    j["otd_target"] = gg.otd_target();
    j["formula"] = format_lsat(psi);
    ctx.out << j.dump() << '\n';
    return kExitOk;
  }
  if (!raw.saturated) ctx.out << "input was not saturated; saturated formula:\n" << format_lsat(psi);
  ctx.out << "variables: " << gg.n_vars << '\n'
          << "clauses: " << gg.n_clauses << '\n'
          << "vertices: " << gg.graph.order() << '\n'
          << "edges: " << gg.graph.edge_count() << '\n'
          << "OD target (satisfiable): " << gg.od_target() << '\n'
          << "OTD target (satisfiable): " << gg.otd_target() << '\n';
  if (graph_out.empty()) ctx.out << format_graph_text(gg.graph);
  return kExitOk;
}

int cmd_sat_roundtrip(Context& ctx, const std::string& path) {
  const LsatInstance psi = load_lsat(path);
  RoundTripReport r;
  try {
    r = sat_roundtrip(psi);
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitUsage, e.what(), "gadget"};
  }
  const std::vector<std::pair<std::string, bool>> checks = {
      {"lower bounds", r.lower_bounds_hold},         {"sat <=> targets attained", r.equivalence_holds},
      {"gadget structure", r.structure_ok},          {"auxiliary graph", r.auxiliary_ok},
      {"codes from the model", r.constructed_codes_ok}, {"assignments from optimal codes", r.extraction_ok}};
  if (ctx.json_mode) {
    json j = envelope("sat-roundtrip");
    j["formula"] = format_lsat(r.formula);
    j["satisfiable"] = r.satisfiable;
    if (r.model) j["model"] = *r.model;
    j["gamma_od"] = r.gamma_od;
    j["gamma_otd"] = r.gamma_otd;
    j["od_target"] = r.od_target;
    j["otd_target"] = r.otd_target;
    json c = json::object();
    for (const auto& [name, ok] : checks) c[name] = ok;
    j["checks"] = std::move(c);
    j["ok"] = r.ok();
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << (r.satisfiable ? "satisfiable" : "unsatisfiable") << '\n'
            << "gamma(OD) = " << r.gamma_od << " (target " << r.od_target << ")\n"
            << "gamma(OTD) = " << r.gamma_otd << " (target " << r.otd_target << ")\n";
    for (const auto& [name, ok] : checks) ctx.out << std::left << std::setw(32) << name << (ok ? "pass" : "FAIL") << '\n';
  }
  return r.ok() ? kExitOk : kExitFail;
}

int cmd_tau(Context& ctx, const std::string& path, bool enumerate, std::size_t cap) {
  const std::string text = read_input(path);
  Clutter c;
  try {
    // Also accept the envelope printed by `clutter --json`.
    const json doc = json::parse(text);
    c = doc.is_object() && doc.contains("clutter") ? parse_clutter_json(doc["clutter"].dump()) : parse_clutter_json(text);
  } catch (const std::exception& e) {
    throw CliError{kExitUsage, path + ": " + e.what(), "clutter-format"};
  }
  if (cap == 0) throw CliError{kExitUsage, "--cap must be positive", "usage"};
  const CoverResult r = min_cover(c, enumerate, cap);
  if (ctx.json_mode) {
    json j = envelope("tau");
    j["value"] = r.value;
    j["witness"] = set_json(r.witness);
    j["nodes"] = r.nodes_explored;
    if (r.all_optima) {
      j["optima"] = sets_json(*r.all_optima);
      j["truncated"] = r.truncated;
    }
    ctx.out << j.dump() << '\n';
    return kExitOk;
  }
  ctx.out << r.value << '\n' << "witness: " << r.witness.to_string() << '\n' << "nodes: " << r.nodes_explored << '\n';
  if (r.all_optima) {
    ctx.out << "optima: " << r.all_optima->size() << (r.truncated ? " (truncated)" : "") << '\n';
    for (const auto& s : *r.all_optima) ctx.out << "  " << s.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_polyhedron(Context& ctx, const std::string& family, std::optional<std::size_t> k, const std::string& path,
                   const std::string& check) {
  const auto hint = hint_from_name(family);
  if (!hint) throw CliError{kExitUsage, "unknown polyhedron family '" + family + "'", "usage"};
  Graph g;
  if (!path.empty()) {
    g = load(path);
  } else if (*hint == FamilyHint::Generic) {
    throw CliError{kExitUsage, "generic systems need a graph file", "usage"};
  } else if (!k) {
    throw CliError{kExitUsage, "--k is required without a graph file", "usage"};
  } else {
    g = generate(family_spec(family, "k=" + std::to_string(*k)));
  }
  const std::vector<std::string> checks = {"validity", "tightness", "hull"};
  if (check != "all" && std::find(checks.begin(), checks.end(), check) == checks.end()) {
    throw CliError{kExitUsage, "unknown check '" + check + "'", "usage"};
  }
  ConstraintSystem sys;
  try {
    sys = od_polyhedron_system(g, *hint);
  } catch (const InadmissibleGraph& e) {
    throw CliError{kExitFail, e.what(), "inadmissible"};
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitUsage, e.what(), "family-mismatch"};
  }
  const Clutter c = clutter_of(g, CodeKind::OD);
  const bool want_all = check == "all";
  std::optional<ValidityReport> valid;
  std::optional<TightnessReport> tight;
  std::optional<HullReport> hull;
  if (want_all || check == "validity") valid = check_validity(sys, c);
  if (want_all || check == "tightness") tight = check_tightness(sys, c);
  if ((want_all || check == "hull") && g.order() <= kExhaustiveMaxOrder) hull = integer_hull_equiv(sys, c);
  const bool ok = (!valid || valid->valid) && (!tight || tight->all_tight()) && (!hull || hull->equivalent);
  const std::size_t total = sys.equalities.size() + sys.inequalities.size();
  if (ctx.json_mode) {
    json j = envelope("polyhedron");
    j["family"] = sys.family;
    j["n"] = sys.n;
    j["equalities"] = sys.equalities;
    json ineq = json::array();
    for (const auto& r : sys.inequalities) {
      ineq.push_back({{"support", set_json(r.support)}, {"rhs", r.rhs}, {"provenance", r.provenance}});
    }
    j["inequalities"] = std::move(ineq);
    if (valid) {
      j["validity"] = {{"valid", valid->valid}, {"exhaustive", valid->exhaustive}, {"covers", valid->covers_checked}};
      if (valid->counterexample) j["validity"]["counterexample"] = set_json(*valid->counterexample);
    }
    if (tight) j["tightness"] = {{"all_tight", tight->all_tight()}, {"never_tight", tight->never_tight()}};
    if (hull) {
      j["hull"] = {{"equivalent", hull->equivalent}, {"points", hull->points}};
      if (hull->mismatch) j["hull"]["mismatch"] = set_json(*hull->mismatch);
    }
    j["ok"] = ok;
    ctx.out << j.dump() << '\n';
    return ok ? kExitOk : kExitFail;
  }
  ctx.out << sys.family << ": " << total << " constraints on " << sys.n << " variables\n";
  for (std::size_t i = 0; i < total; ++i) ctx.out << "  " << describe_constraint(sys, i, &g) << '\n';
  if (valid) {
    ctx.out << "validity: " << (valid->valid ? "pass" : "FAIL") << " (" << valid->covers_checked
            << (valid->exhaustive ? " covers)" : " minimum covers)") << '\n';
    if (valid->counterexample) {
      ctx.out << "  counterexample " << valid->counterexample->to_string() << " violates "
              << describe_constraint(sys, *valid->violated, &g) << '\n';
    }
  }
  if (tight) {
    ctx.out << "tightness: " << (tight->all_tight() ? "pass" : "FAIL") << '\n';
    for (auto i : tight->never_tight()) {
      ctx.out << "  never tight: " << describe_constraint(sys, sys.equalities.size() + i, &g) << '\n';
    }
  }
  if (hull) {
    ctx.out << "0/1 hull: " << (hull->equivalent ? "pass" : "FAIL") << " (" << hull->points << " points)\n";
    if (hull->mismatch) {
      ctx.out << "  " << hull->mismatch->to_string() << (hull->mismatch_is_cover ? " is a cover violating the system\n"
                                                                                 : " satisfies the system but is no cover\n");
    }
  } else if (want_all || check == "hull") {
    ctx.out << "0/1 hull: skipped (more than " << kExhaustiveMaxOrder << " vertices)\n";
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_report(Context& ctx, const std::string& table, std::size_t max_k, std::uint64_t seed) {
  const auto& tables = report_tables();
  if (table != "all" && std::find(tables.begin(), tables.end(), table) == tables.end()) {
    throw CliError{kExitUsage, "unknown report table '" + table + "'", "usage"};
  }
  const auto rows = build_report(table, {max_k, seed});
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
  if (ctx.json_mode) {
    json j = envelope("report");
    j["table"] = table;
    j["seed"] = seed;
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"table", r.table},
                     {"instance", r.instance},
                     {"quantity", r.quantity},
                     {"expected", r.expected},
                     {"actual", r.actual},
                     {"pass", r.pass}});
    }
    j["rows"] = std::move(arr);
    j["ok"] = ok;
    ctx.out << j.dump() << '\n';
    return ok ? kExitOk : kExitFail;
  }
  std::size_t w_inst = 8;
  std::size_t w_q = 8;
  std::size_t w_e = 8;
  for (const auto& r : rows) {
    w_inst = std::max(w_inst, r.instance.size());
    w_q = std::max(w_q, r.quantity.size());
    w_e = std::max(w_e, r.expected.size());
  }
  w_e = std::min<std::size_t>(w_e, 40);
  std::size_t failed = 0;
  for (const auto& r : rows) {
    failed += r.pass ? 0 : 1;
    ctx.out << std::left << std::setw(13) << r.table << std::setw(static_cast<int>(w_inst + 2)) << r.instance
            << std::setw(static_cast<int>(w_q + 2)) << r.quantity << std::setw(static_cast<int>(w_e + 2)) << r.expected
            << std::setw(static_cast<int>(w_e + 2)) << r.actual << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  ctx.out << rows.size() << " rows, " << failed << " failed\n";
  return ok ? kExitOk : kExitFail;
}

void print_error(Context& ctx, std::ostream& err, const CliError& e) {
  if (ctx.json_mode) {
    json j;
    j["schema"] = 1;
    j["error"] = {{"code", e.code}, {"rule", e.rule}, {"message", e.message}};
    ctx.out << j.dump() << '\n';
  } else {
    err << "odcode: " << e.message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open-separating dominating codes: compute, verify and analyse."};
  app.name("odcode");
  app.require_subcommand(1);
  Context ctx{out};
  app.add_flag("--json", ctx.json_mode, "machine-readable output");

  std::string graph_path;
  std::string kind = "OD";
  std::string family;
  std::string params;
  std::string code;
  std::string graph_out;
  std::string roles_out;
  std::string lsat_path;
  std::string check = "all";
  std::string table = "all";
  bool enumerate = false;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t max_k = 0;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> k;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", ctx.json_mode, "machine-readable output"); };
  auto add_kind = [&](CLI::App* sub) { sub->add_option("--kind", kind, "OD, OTD, ID, ITD, LD or LTD")->capture_default_str(); };

  auto* generate_cmd = app.add_subcommand("generate", "emit a family graph");
  generate_cmd->add_option("--family", family, "family or named graph")->required();
  generate_cmd->add_option("--params", params, "k=4, sizes=2:3:3, chords=0-2:1-3");
  add_json(generate_cmd);

  auto* clutter_cmd = app.add_subcommand("clutter", "print the reduced hypergraph of a graph");
  clutter_cmd->add_option("graph", graph_path, "graph file ('-' for stdin)")->required();
  add_kind(clutter_cmd);
  add_json(clutter_cmd);

  auto* gamma_cmd = app.add_subcommand("gamma", "minimum code size and a witness");
  gamma_cmd->add_option("graph", graph_path, "graph file ('-' for stdin)")->required();
  add_kind(gamma_cmd);
  gamma_cmd->add_flag("--enumerate", enumerate, "list every minimum code");
  gamma_cmd->add_option("--cap", cap, "enumeration cap")->capture_default_str();
  add_json(gamma_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a vertex set");
  verify_cmd->add_option("graph", graph_path, "graph file ('-' for stdin)")->required();
  add_kind(verify_cmd);
  verify_cmd->add_option("--code", code, "comma separated vertices")->required();
  add_json(verify_cmd);

  auto* relations_cmd = app.add_subcommand("relations", "check the bounds between code numbers");
  relations_cmd->add_option("graph", graph_path, "graph file ('-' for stdin)")->required();
  add_json(relations_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce-sat", "build the gadget graph of an LSAT formula");
  reduce_cmd->add_option("formula", lsat_path, "LSAT file ('-' for stdin)")->required();
  reduce_cmd->add_option("--emit-graph", graph_out, "write the graph text here");
  reduce_cmd->add_option("--emit-roles", roles_out, "write the vertex roles JSON here");
  add_json(reduce_cmd);

  auto* roundtrip_cmd = app.add_subcommand("sat-roundtrip", "check every property of the reduction on a formula");
  roundtrip_cmd->add_option("formula", lsat_path, "LSAT file ('-' for stdin)")->required();
  add_json(roundtrip_cmd);

  auto* tau_cmd = app.add_subcommand("tau", "minimum cover of a clutter given as JSON");
  tau_cmd->add_option("clutter", graph_path, "clutter JSON file ('-' for stdin)")->required();
  tau_cmd->add_flag("--enumerate", enumerate, "list every minimum cover");
  tau_cmd->add_option("--cap", cap, "enumeration cap")->capture_default_str();
  add_json(tau_cmd);

  auto* poly_cmd = app.add_subcommand("polyhedron", "emit and check a covering polyhedron system");
  poly_cmd->add_option("--family", family, "clique, matching, fan, half-graph, thick-spider, thin-spider, "
                                           "extended-thin-spider, sunlet, almost-complete-thin-sun or generic")
      ->required();
  poly_cmd->add_option("--k", k, "family parameter");
  poly_cmd->add_option("graph", graph_path, "graph file instead of a generated one");
  poly_cmd->add_option("--check", check, "validity, tightness, hull or all")->capture_default_str();
  add_json(poly_cmd);

  auto* report_cmd = app.add_subcommand("report", "regenerate the verification tables");
  report_cmd->add_option("table", table, "all, p4, small-graphs, families, clutters, relations, sat, roses, "
                                         "polyhedra or oracle")
      ->capture_default_str();
  report_cmd->add_option("--max-k", max_k, "largest family parameter (0: no bound)");
  report_cmd->add_option("--seed", seed, "seed for the random graphs")->capture_default_str();
  add_json(report_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    const CliError ce{kExitUsage, e.what(), "usage"};
    print_error(ctx, err, ce);
    if (!ctx.json_mode) err << "run 'odcode --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (*generate_cmd) return cmd_generate(ctx, family, params);
    if (*clutter_cmd) return cmd_clutter(ctx, graph_path, kind);
    if (*gamma_cmd) return cmd_gamma(ctx, graph_path, kind, enumerate, cap);
    if (*verify_cmd) return cmd_verify(ctx, graph_path, kind, code);
    if (*relations_cmd) return cmd_relations(ctx, graph_path);
    if (*reduce_cmd) return cmd_reduce_sat(ctx, lsat_path, graph_out, roles_out);
    if (*roundtrip_cmd) return cmd_sat_roundtrip(ctx, lsat_path);
    if (*tau_cmd) return cmd_tau(ctx, graph_path, enumerate, cap);
    if (*poly_cmd) return cmd_polyhedron(ctx, family, k, graph_path, check);
    if (*report_cmd) return cmd_report(ctx, table, max_k, seed);
  } catch (const CliError& e) {
    print_error(ctx, err, e);
    return e.code;
  } catch (const InadmissibleGraph& e) {
    print_error(ctx, err, {kExitFail, e.what(), "inadmissible"});
    return kExitFail;
  } catch (const std::exception& e) {
    print_error(ctx, err, {kExitUsage, e.what(), "error"});
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace odcode::cli
