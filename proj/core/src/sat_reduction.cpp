#include "odcode/sat_reduction.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>

#include "odcode/codes.hpp"

namespace odcode {

namespace {

std::size_t lit_key(Literal l) { return 2 * var_of(l) + (is_negative(l) ? 1 : 0); }
Literal key_lit(std::size_t key) {
  const auto v = static_cast<Literal>(key / 2 + 1);
  return key % 2 == 1 ? -v : v;
}

std::string lit_name(Literal l) { return (l < 0 ? "~x" : "x") + std::to_string(var_of(l) + 1); }

std::string clause_text(const std::vector<Literal>& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " v " : "") << lit_name(c[i]);
  os << ')';
  return os.str();
}

void sort_clause(std::vector<Literal>& c) {
  std::sort(c.begin(), c.end(), [](Literal a, Literal b) {
    if (a == 0 || b == 0) return a < b;
    return lit_key(a) < lit_key(b);
  });
}

std::map<Literal, std::size_t> occurrences(const LsatInstance& psi) {
  std::map<Literal, std::size_t> occ;
  for (const auto& c : psi.clauses) {
    for (Literal l : c) ++occ[l];
  }
  return occ;
}

std::size_t shared(const std::vector<Literal>& a, const std::vector<Literal>& b) {
  std::size_t s = 0;
  for (Literal x : a) s += static_cast<std::size_t>(std::count(b.begin(), b.end(), x));
  return s;
}

}  // namespace

std::vector<LsatViolation> lsat_violations(const LsatInstance& psi) {
  std::vector<LsatViolation> out;
  for (std::size_t i = 0; i < psi.clauses.size(); ++i) {
    const auto& c = psi.clauses[i];
    const std::string where = "clause " + std::to_string(i + 1);
    if (c.empty()) out.push_back({"empty-clause", where + " has no literal"});
    if (c.size() > 3) out.push_back({"clause-too-long", where + " has " + std::to_string(c.size()) + " literals"});
    bool in_range = true;
    for (Literal l : c) {
      if (l == 0 || var_of(l) >= psi.n_vars) {
        out.push_back({"variable-out-of-range", where + " uses literal " + std::to_string(l)});
        in_range = false;
      }
    }
    if (!in_range) continue;
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (c[a] == c[b]) out.push_back({"duplicate-literal", where + " repeats " + lit_name(c[a])});
        if (c[a] == -c[b]) {
          out.push_back({"complementary-literals", where + " contains both literals of x" +
                                                       std::to_string(var_of(c[a]) + 1)});
        }
      }
    }
  }
  if (!out.empty()) return out;
  for (const auto& [l, k] : occurrences(psi)) {
    if (k > 2) {
      out.push_back({"literal-in-3-clauses", lit_name(l) + " occurs in " + std::to_string(k) + " clauses"});
    }
  }
  for (std::size_t i = 0; i < psi.clauses.size(); ++i) {
    for (std::size_t j = i + 1; j < psi.clauses.size(); ++j) {
      auto a = psi.clauses[i];
      auto b = psi.clauses[j];
      sort_clause(a);
      sort_clause(b);
      const std::string pair = "clauses " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
      if (a == b) {
        out.push_back({"duplicate-clause", pair + " are both " + clause_text(a)});
      } else if (shared(a, b) > 1) {
        out.push_back({"shared-pair", pair + " share more than one literal"});
      }
    }
  }
  return out;
}

LsatInstance normalize(LsatInstance psi) {
  const auto v = lsat_violations(psi);
  if (!v.empty()) throw LsatError(v.front().rule, v.front().detail);
  for (auto& c : psi.clauses) sort_clause(c);
  psi.saturated = is_saturated(psi);
  return psi;
}

LsatInstance parse_lsat(std::string_view text) {
  LsatInstance psi;
  bool have_header = false;
  std::size_t expected = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto syntax = [&](const std::string& what) {
    return LsatError("syntax", "line " + std::to_string(line_no) + ": " + what);
  };
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    std::istringstream is(line);
    std::vector<std::string> toks;
    for (std::string t; is >> t;) toks.push_back(t);
    if (toks.empty() || toks[0] == "c" || toks[0][0] == 'c' || toks[0][0] == '#') continue;
    if (!have_header) {
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "lsat") throw syntax("expected header 'p lsat <n> <m>'");
      auto num = [&](const std::string& t) {
        std::size_t x = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
        if (ec != std::errc() || p != t.data() + t.size()) throw syntax("bad count '" + t + "'");
        return x;
      };
      psi.n_vars = num(toks[2]);
      expected = num(toks[3]);
      have_header = true;
      continue;
    }
    std::vector<Literal> clause;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      int x = 0;
      const auto& t = toks[i];
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
      if (ec != std::errc() || p != t.data() + t.size()) throw syntax("bad literal '" + t + "'");
      if (x == 0) {
        if (i + 1 != toks.size()) throw syntax("tokens after clause terminator 0");
        break;
      }
      if (i + 1 == toks.size()) throw syntax("clause not terminated by 0");
      clause.push_back(x);
    }
    psi.clauses.push_back(std::move(clause));
  }
  if (!have_header) throw LsatError("syntax", "missing header 'p lsat <n> <m>'");
  if (psi.clauses.size() != expected) {
    throw LsatError("clause-count", "header announces " + std::to_string(expected) + " clauses, found " +
                                        std::to_string(psi.clauses.size()));
  }
  return normalize(std::move(psi));
}

std::string format_lsat(const LsatInstance& psi) {
  std::ostringstream os;
  os << "p lsat " << psi.n_vars << ' ' << psi.clauses.size() << '\n';
  for (const auto& c : psi.clauses) {
    for (Literal l : c) os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

bool is_saturated(const LsatInstance& psi) {
  for (const auto& [l, k] : occurrences(psi)) {
    if (k != 2) return false;
  }
  return true;
}

LsatInstance saturate(const LsatInstance& psi) {
  LsatInstance out = normalize(psi);
  while (true) {
    const auto occ = occurrences(out);
    std::vector<Literal> once;
    for (std::size_t key = 0; key < 2 * out.n_vars; ++key) {
      auto it = occ.find(key_lit(key));
      if (it != occ.end() && it->second == 1) once.push_back(it->first);
    }
    if (once.empty()) break;
    for (Literal x : once) {
      const auto y = static_cast<Literal>(++out.n_vars);
      out.clauses.push_back({x, y});
      out.clauses.push_back({y});
    }
  }
  return normalize(std::move(out));
}

bool satisfies(const LsatInstance& psi, const Assignment& a) {
  if (a.size() != psi.n_vars) return false;
  return std::all_of(psi.clauses.begin(), psi.clauses.end(), [&](const std::vector<Literal>& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal l) { return a[var_of(l)] != is_negative(l); });
  });
}

std::optional<Assignment> brute_force_sat(const LsatInstance& psi) {
  if (psi.n_vars > kBruteForceSatMaxVars) {
    throw std::invalid_argument("brute force SAT limited to " + std::to_string(kBruteForceSatMaxVars) +
                                " variables");
  }
  Assignment a(psi.n_vars);
  const std::uint64_t total = std::uint64_t{1} << psi.n_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t v = 0; v < psi.n_vars; ++v) a[v] = ((mask >> v) & 1U) != 0;
    if (satisfies(psi, a)) return a;
  }
  return std::nullopt;
}

std::string role_label(const RoleTag& tag) {
  static constexpr std::array<const char*, 8> names = {"w1_x", "w2_x", "v1_x", "v2_x",
                                                       "v3_x", "u1_c", "u2_c", "u3_c"};
  return names[static_cast<std::size_t>(tag.role)] + std::to_string(tag.index + 1);
}

GadgetGraph build_gadget(const LsatInstance& raw) {
  const LsatInstance psi = normalize(raw);
  if (!psi.saturated) throw std::invalid_argument("gadget construction needs a saturated formula");
  const auto occ = occurrences(psi);
  GadgetGraph gg;
  gg.formula = psi;
  gg.n_vars = psi.n_vars;
  gg.n_clauses = psi.clauses.size();
  gg.w1.assign(gg.n_vars, std::nullopt);
  gg.w2.assign(gg.n_vars, std::nullopt);
  std::vector<Edge> edges;
  std::size_t n = 0;
  auto add = [&](GadgetRole role, std::size_t index) {
    gg.roles.push_back({role, index});
    return n++;
  };
  for (std::size_t x = 0; x < gg.n_vars; ++x) {
    const auto pos = static_cast<Literal>(x + 1);
    const bool has_pos = occ.contains(pos);
    const bool has_neg = occ.contains(-pos);
    if (!has_pos && !has_neg) {
      throw std::invalid_argument("variable x" + std::to_string(x + 1) +
                                  " occurs in no clause (its v1 and v3 would be open twins)");
    }
    if (has_pos) gg.w1[x] = add(GadgetRole::W1, x);
    if (has_neg) gg.w2[x] = add(GadgetRole::W2, x);
    gg.v1.push_back(add(GadgetRole::V1, x));
    gg.v2.push_back(add(GadgetRole::V2, x));
    gg.v3.push_back(add(GadgetRole::V3, x));
    for (const auto& w : {gg.w1[x], gg.w2[x]}) {
      if (w) edges.push_back({*w, gg.v1[x]});
    }
    edges.push_back({gg.v1[x], gg.v2[x]});
    edges.push_back({gg.v2[x], gg.v3[x]});
  }
  for (std::size_t c = 0; c < gg.n_clauses; ++c) {
    gg.u1.push_back(add(GadgetRole::U1, c));
    gg.u2.push_back(add(GadgetRole::U2, c));
    gg.u3.push_back(add(GadgetRole::U3, c));
    edges.push_back({gg.u1[c], gg.u2[c]});
    edges.push_back({gg.u2[c], gg.u3[c]});
    for (Literal l : psi.clauses[c]) {
      const auto w = is_negative(l) ? gg.w2[var_of(l)] : gg.w1[var_of(l)];
      edges.push_back({*w, gg.u1[c]});
    }
  }
  Labels labels;
  for (Vertex v = 0; v < n; ++v) labels[v] = role_label(gg.roles[v]);
  gg.graph = Graph(n, edges, std::move(labels));
  return gg;
}

VertexSet assignment_to_code(const GadgetGraph& gg, const Assignment& a, CodeKind kind,
                             std::optional<std::size_t> x0) {
  if (kind != CodeKind::OD && kind != CodeKind::OTD) {
    throw std::invalid_argument("assignment_to_code supports OD and OTD only");
  }
  if (!satisfies(gg.formula, a)) throw std::invalid_argument("assignment does not satisfy the formula");
  const std::size_t fixed = x0.value_or(0);
  if (fixed >= gg.n_vars) throw std::invalid_argument("x0 out of range");
  VertexSet s(gg.graph.order());
  for (std::size_t x = 0; x < gg.n_vars; ++x) {
    if (x != fixed || kind == CodeKind::OTD) s.set(gg.v1[x]);
    s.set(gg.v2[x]);
    if (gg.w1[x] && gg.w2[x]) {
      s.set(a[x] ? *gg.w1[x] : *gg.w2[x]);
    } else {
      s.set(gg.w1[x] ? *gg.w1[x] : *gg.w2[x]);
    }
  }
  for (std::size_t c = 0; c < gg.n_clauses; ++c) {
    s.set(gg.u1[c]);
    s.set(gg.u2[c]);
  }
  return s;
}

Assignment code_to_assignment(const GadgetGraph& gg, const VertexSet& s) {
  Assignment a(gg.n_vars);
  for (std::size_t x = 0; x < gg.n_vars; ++x) {
    const bool in1 = gg.w1[x] && s.test(*gg.w1[x]);
    const bool in2 = gg.w2[x] && s.test(*gg.w2[x]);
    if (in1 == in2) {
      throw std::invalid_argument("variable x" + std::to_string(x + 1) + " has " +
                                  (in1 ? "both" : "neither") + " of its w vertices in the code");
    }
    a[x] = in1;
  }
  if (!satisfies(gg.formula, a)) {
    throw std::invalid_argument("extracted assignment does not satisfy the formula; the set is not open-separating");
  }
  return a;
}

VertexSet triple_set(const GadgetGraph& gg) {
  VertexSet t(gg.graph.order());
  for (std::size_t x = 0; x < gg.n_vars; ++x) {
    t.set(gg.v1[x]);
    t.set(gg.v2[x]);
    t.set(gg.v3[x]);
  }
  for (std::size_t c = 0; c < gg.n_clauses; ++c) {
    t.set(gg.u1[c]);
    t.set(gg.u2[c]);
    t.set(gg.u3[c]);
  }
  return t;
}

Graph auxiliary_graph(const LsatInstance& psi) {
  const auto occ = occurrences(psi);
  const std::size_t m = psi.clauses.size();
  std::map<Literal, Vertex> index;
  Labels labels;
  for (std::size_t c = 0; c < m; ++c) labels[c] = "C" + std::to_string(c + 1);
  Vertex next = m;
  for (std::size_t key = 0; key < 2 * psi.n_vars; ++key) {
    const Literal l = key_lit(key);
    if (!occ.contains(l)) continue;
    labels[next] = lit_name(l);
    index[l] = next++;
  }
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < m; ++c) {
    for (Literal l : psi.clauses[c]) edges.push_back({c, index.at(l)});
  }
  return Graph(next, edges, std::move(labels));
}

std::string gadget_roles_json(const GadgetGraph& gg) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n_vars"] = gg.n_vars;
  j["n_clauses"] = gg.n_clauses;
  j["od_target"] = gg.od_target();
  j["otd_target"] = gg.otd_target();
  auto roles = nlohmann::ordered_json::object();
  for (Vertex v = 0; v < gg.roles.size(); ++v) roles[std::to_string(v)] = role_label(gg.roles[v]);
  j["roles"] = std::move(roles);
  return j.dump() + "\n";
}

namespace {

// Clause codes: bits 0-1 size, then one 4-bit literal key per slot.
using ClauseCode = std::uint16_t;

ClauseCode encode(std::vector<std::size_t> keys) {
  std::sort(keys.begin(), keys.end());
  ClauseCode code = static_cast<ClauseCode>(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) code |= static_cast<ClauseCode>(keys[i] << (2 + 4 * i));
  return code;
}

std::vector<std::size_t> decode(ClauseCode code) {
  std::vector<std::size_t> keys(code & 3U);
  for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = (code >> (2 + 4 * i)) & 15U;
  return keys;
}

std::vector<ClauseCode> canonical(const std::vector<std::vector<std::size_t>>& clauses, std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ClauseCode> best;
  std::vector<ClauseCode> cur(clauses.size());
  do {
    for (std::size_t flips = 0; flips < (std::size_t{1} << k); ++flips) {
      for (std::size_t i = 0; i < clauses.size(); ++i) {
        std::vector<std::size_t> keys;
        for (auto key : clauses[i]) {
          const std::size_t v = key / 2;
          keys.push_back(2 * perm[v] + ((key % 2) ^ ((flips >> v) & 1U)));
        }
        cur[i] = encode(std::move(keys));
      }
      std::sort(cur.begin(), cur.end());
      if (best.empty() || cur < best) best = cur;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

class SlSatEnumerator {
 public:
  SlSatEnumerator(std::size_t max_vars, std::size_t max_clauses, bool saturated_only)
      : max_vars_(max_vars), max_clauses_(max_clauses), saturated_only_(saturated_only), count_(2 * max_vars, 0) {
    for (std::size_t size = 1; size <= 3; ++size) {
      std::vector<std::size_t> vars(size);
      build_pool(vars, 0, 0, size);
    }
    const std::size_t p = pool_.size();
    compatible_.assign(p * p, false);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        std::size_t common = 0;
        for (auto a : pool_[i]) common += static_cast<std::size_t>(std::count(pool_[j].begin(), pool_[j].end(), a));
        compatible_[i * p + j] = common <= 1 && i != j;
      }
    }
  }

  std::vector<LsatInstance> run() {
    dfs(0);
    std::vector<LsatInstance> out;
    for (const auto& [k, codes] : found_) {
      LsatInstance psi;
      psi.n_vars = k;
      for (auto code : codes) {
        std::vector<Literal> clause;
        for (auto key : decode(code)) clause.push_back(key_lit(key));
        psi.clauses.push_back(std::move(clause));
      }
      out.push_back(normalize(std::move(psi)));
    }
    return out;
  }

 private:
  void build_pool(std::vector<std::size_t>& vars, std::size_t slot, std::size_t from, std::size_t size) {
    if (slot == size) {
      for (std::size_t signs = 0; signs < (std::size_t{1} << size); ++signs) {
        std::vector<std::size_t> keys;
        for (std::size_t i = 0; i < size; ++i) keys.push_back(2 * vars[i] + ((signs >> i) & 1U));
        pool_.push_back(std::move(keys));
      }
      return;
    }
    for (std::size_t v = from; v < max_vars_; ++v) {
      vars[slot] = v;
      build_pool(vars, slot + 1, v + 1, size);
    }
  }

  void dfs(std::size_t start) {
    if (!chosen_.empty() && (open_ == 0 || !saturated_only_)) consider();
    if (chosen_.size() == max_clauses_) return;
    const std::size_t p = pool_.size();
    for (std::size_t i = start; i < p; ++i) {
      bool ok = true;
      for (auto j : chosen_) {
        if (!compatible_[i * p + j]) {
          ok = false;
          break;
        }
      }
      for (auto key : pool_[i]) ok = ok && count_[key] < 2;
      if (!ok) continue;
      std::size_t open = open_;
      for (auto key : pool_[i]) open = count_[key] == 0 ? open + 1 : open - 1;
      if (saturated_only_ && open > 3 * (max_clauses_ - chosen_.size() - 1)) continue;
      for (auto key : pool_[i]) ++count_[key];
      chosen_.push_back(i);
      const std::size_t saved = open_;
      open_ = open;
      dfs(i + 1);
      open_ = saved;
      chosen_.pop_back();
      for (auto key : pool_[i]) --count_[key];
    }
  }

  void consider() {
    std::size_t used = 0;
    for (std::size_t v = 0; v < max_vars_; ++v) {
      if (count_[2 * v] + count_[2 * v + 1] > 0) used |= std::size_t{1} << v;
    }
    const auto k = static_cast<std::size_t>(__builtin_popcountll(used));
    if (used != (std::size_t{1} << k) - 1) return;
    std::vector<std::vector<std::size_t>> clauses;
    for (auto i : chosen_) clauses.push_back(pool_[i]);
    found_.insert({k, canonical(clauses, k)});
  }

  std::size_t max_vars_;
  std::size_t max_clauses_;
  bool saturated_only_;
  std::vector<std::vector<std::size_t>> pool_;
  std::vector<bool> compatible_;
  std::vector<std::size_t> count_;
  std::vector<std::size_t> chosen_;
  std::size_t open_ = 0;
  std::set<std::pair<std::size_t, std::vector<ClauseCode>>> found_;
};

bool partition_matches(const GadgetGraph& gg) {
  std::vector<int> side(gg.graph.order(), 1);
  for (std::size_t x = 0; x < gg.n_vars; ++x) side[gg.v1[x]] = side[gg.v3[x]] = 0;
  for (std::size_t c = 0; c < gg.n_clauses; ++c) side[gg.u1[c]] = side[gg.u3[c]] = 0;
  for (const auto& e : gg.graph.edges()) {
    if (side[e.u] == side[e.v]) return false;
  }
  return true;
}

LsatInstance compact_variables(const LsatInstance& psi) {
  std::vector<std::size_t> remap(psi.n_vars, SIZE_MAX);
  LsatInstance out;
  for (const auto& c : psi.clauses) {
    std::vector<Literal> nc;
    for (Literal l : c) {
      auto& r = remap[var_of(l)];
      if (r == SIZE_MAX) r = out.n_vars++;
      const auto v = static_cast<Literal>(r + 1);
      nc.push_back(is_negative(l) ? -v : v);
    }
    out.clauses.push_back(std::move(nc));
  }
  return normalize(std::move(out));
}

}  // namespace

std::vector<LsatInstance> enumerate_sl_sat(std::size_t max_vars, std::size_t max_clauses,
                                           bool saturated_only) {
  if (max_vars > 4) throw std::invalid_argument("enumeration supports at most 4 variables");
  return SlSatEnumerator(max_vars, max_clauses, saturated_only).run();
}

RoundTripReport sat_roundtrip(const LsatInstance& psi) {
  RoundTripReport r;
  const LsatInstance base = compact_variables(normalize(psi));
  r.formula = base.saturated ? base : saturate(base);
  const GadgetGraph gg = build_gadget(r.formula);
  r.model = brute_force_sat(r.formula);
  r.satisfiable = r.model.has_value();
  r.od_target = gg.od_target();
  r.otd_target = gg.otd_target();
  const GammaResult od = gamma(gg.graph, CodeKind::OD);
  const GammaResult otd = gamma(gg.graph, CodeKind::OTD);
  r.gamma_od = od.value;
  r.gamma_otd = otd.value;
  r.lower_bounds_hold = od.value >= r.od_target && otd.value >= r.otd_target;
  r.equivalence_holds = r.satisfiable == (od.value == r.od_target) &&
                        r.satisfiable == (otd.value == r.otd_target) &&
                        r.satisfiable == brute_force_sat(base).has_value();
  const Graph& g = gg.graph;
  r.structure_ok = is_bipartite(g) && max_degree(g) <= 4 && girth(g) >= 6 && partition_matches(gg);
  const Graph aux = auxiliary_graph(r.formula);
  r.auxiliary_ok = is_bipartite(aux) && max_degree(aux) <= 3 && girth(aux) >= 6;
  if (r.model) {
    for (std::size_t x0 = 0; x0 < gg.n_vars; ++x0) {
      const VertexSet s_od = assignment_to_code(gg, *r.model, CodeKind::OD, x0);
      const VertexSet s_otd = assignment_to_code(gg, *r.model, CodeKind::OTD, x0);
      r.constructed_codes_ok = r.constructed_codes_ok && s_od.count() == r.od_target &&
                               is_code(g, s_od, CodeKind::OD) && s_otd.count() == r.otd_target &&
                               is_code(g, s_otd, CodeKind::OTD);
    }
  }
  auto extracts = [&](const VertexSet& s) {
    try {
      return satisfies(r.formula, code_to_assignment(gg, s));
    } catch (const std::invalid_argument&) {
      return false;
    }
  };
  if (od.value == r.od_target) r.extraction_ok = r.extraction_ok && extracts(od.witness);
  if (otd.value == r.otd_target) r.extraction_ok = r.extraction_ok && extracts(otd.witness);
  return r;
}

}  // namespace odcode
