#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "odcode/codes.hpp"
#include "odcode/sat_reduction.hpp"
#include "oracle.hpp"

using namespace odcode;

namespace {

using Clauses = std::vector<std::vector<int>>;

// All clauses over variables 1..3 with distinct variables, sizes 1..3.
std::vector<std::vector<int>> clause_pool(int vars) {
  std::vector<std::vector<int>> pool;
  for (int mask = 1; mask < (1 << vars); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < vars; ++v) {
      if ((mask >> v) & 1) vs.push_back(v + 1);
    }
    for (int signs = 0; signs < (1 << vs.size()); ++signs) {
      std::vector<int> c;
      for (std::size_t i = 0; i < vs.size(); ++i) c.push_back((signs >> i) & 1 ? -vs[i] : vs[i]);
      pool.push_back(c);
    }
  }
  return pool;
}

bool linear(const Clauses& cs) {
  std::map<int, int> occ;
  for (const auto& c : cs) {
    for (int l : c) {
      if (++occ[l] > 2) return false;
    }
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      int common = 0;
      for (int l : cs[i]) common += static_cast<int>(std::count(cs[j].begin(), cs[j].end(), l));
      if (common > 1) return false;
    }
  }
  return true;
}

bool saturated(const Clauses& cs) {
  std::map<int, int> occ;
  for (const auto& c : cs) {
    for (int l : c) ++occ[l];
  }
  return std::all_of(occ.begin(), occ.end(), [](const auto& e) { return e.second == 2; });
}

int used_vars(const Clauses& cs) {
  int mask = 0;
  for (const auto& c : cs) {
    for (int l : c) mask |= 1 << (std::abs(l) - 1);
  }
  return mask;
}

// Smallest image under every renaming and polarity flip of the three variables.
Clauses canonical(const Clauses& cs) {
  std::array<int, 3> perm = {0, 1, 2};
  Clauses best;
  bool first = true;
  do {
    for (int flips = 0; flips < 8; ++flips) {
      Clauses img;
      for (const auto& c : cs) {
        std::vector<int> d;
        for (int l : c) {
          const int v = std::abs(l) - 1;
          const bool neg = (l < 0) != (((flips >> v) & 1) != 0);
          d.push_back(neg ? -(perm[v] + 1) : perm[v] + 1);
        }
        std::sort(d.begin(), d.end(), [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b; });
        img.push_back(d);
      }
      std::sort(img.begin(), img.end());
      if (first || img < best) best = img;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Independent enumeration of clause sets over three variables, by plain subset search.
std::set<Clauses> small_instances(std::size_t max_clauses, bool saturated_only) {
  const auto pool = clause_pool(3);
  std::set<Clauses> out;
  Clauses cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (!cur.empty()) {
      const int used = used_vars(cur);
      // Used variables must be a prefix 1..k up to renaming; canonical() takes care of that.
      if ((!saturated_only || saturated(cur)) && (used & (used + 1)) == 0) out.insert(canonical(cur));
    }
    if (cur.size() == max_clauses) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      if (linear(cur)) go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

Clauses clauses_of(const LsatInstance& psi) { return psi.clauses; }

LsatInstance instance(const Clauses& cs) {
  LsatInstance psi;
  psi.n_vars = 0;
  for (const auto& c : cs) {
    for (int l : c) psi.n_vars = std::max<std::size_t>(psi.n_vars, static_cast<std::size_t>(std::abs(l)));
  }
  psi.clauses = cs;
  return normalize(psi);
}

}  // namespace

TEST(SatProperties, EnumeratorMatchesIndependentSearch) {
  const auto expected = small_instances(6, true);
  const auto got = enumerate_sl_sat(3, 6);
  EXPECT_EQ(expected.size(), 48U);
  ASSERT_EQ(got.size(), expected.size());
  std::set<Clauses> canon;
  for (const auto& psi : got) canon.insert(canonical(clauses_of(psi)));
  EXPECT_EQ(canon, expected);
}

TEST(SatProperties, SaturationPreservesSatisfiability) {
  const auto all = small_instances(4, false);
  ASSERT_GT(all.size(), 100U);
  for (const auto& cs : all) {
    const auto psi = instance(cs);
    const auto sat = saturate(psi);
    EXPECT_TRUE(sat.saturated);
    EXPECT_LE(sat.n_vars, 3 * psi.n_vars);
    EXPECT_LE(sat.clauses.size(), psi.clauses.size() + 4 * psi.n_vars);
    EXPECT_EQ(oracle::satisfiable(static_cast<int>(psi.n_vars), cs),
              oracle::satisfiable(static_cast<int>(sat.n_vars), sat.clauses));
    EXPECT_EQ(brute_force_sat(psi).has_value(), oracle::satisfiable(static_cast<int>(psi.n_vars), cs));
  }
}

TEST(SatProperties, GadgetShape) {
  for (const auto& psi : enumerate_sl_sat(3, 6)) {
    const auto gg = build_gadget(psi);
    std::size_t expected = 3 * psi.clauses.size();
    for (std::size_t x = 0; x < psi.n_vars; ++x) {
      expected += 3 + (gg.w1[x] ? 1 : 0) + (gg.w2[x] ? 1 : 0);
    }
    EXPECT_EQ(gg.graph.order(), expected);
    const auto o = oracle::from(gg.graph);
    EXPECT_TRUE(oracle::bipartite(o));
    EXPECT_LE(oracle::max_degree(o), 4);
    const int g = oracle::girth(o);
    EXPECT_TRUE(g == -1 || g >= 6);
    for (std::size_t c = 0; c < psi.clauses.size(); ++c) {
      for (const auto& l : psi.clauses[c]) {
        const auto w = l > 0 ? gg.w1[var_of(l)] : gg.w2[var_of(l)];
        ASSERT_TRUE(w.has_value());
        EXPECT_TRUE(gg.graph.adjacent(*w, gg.u1[c]));
      }
    }
  }
}

// Every satisfying assignment and every choice of the distinguished variable give codes.
TEST(SatProperties, EveryModelAndAnchorGivesCodes) {
  for (const auto& psi : enumerate_sl_sat(3, 6)) {
    const auto gg = build_gadget(psi);
    const auto o = oracle::from(gg.graph);
    for (oracle::Mask a = 0; a < (oracle::Mask{1} << psi.n_vars); ++a) {
      Assignment asg(psi.n_vars);
      for (std::size_t v = 0; v < psi.n_vars; ++v) asg[v] = ((a >> v) & 1U) != 0;
      if (!oracle::satisfies(psi.clauses, asg)) continue;
      for (std::size_t x0 = 0; x0 < psi.n_vars; ++x0) {
        const auto od = assignment_to_code(gg, asg, CodeKind::OD, x0);
        const auto otd = assignment_to_code(gg, asg, CodeKind::OTD, x0);
        EXPECT_EQ(od.count(), gg.od_target());
        EXPECT_EQ(otd.count(), gg.otd_target());
        EXPECT_TRUE(oracle::is_code(o, oracle::mask_of(od), CodeKind::OD));
        EXPECT_TRUE(oracle::is_code(o, oracle::mask_of(otd), CodeKind::OTD));
        // Variables occurring in one polarity only read back their forced value.
        const auto back = code_to_assignment(gg, od);
        EXPECT_TRUE(oracle::satisfies(psi.clauses, back));
        for (std::size_t v = 0; v < psi.n_vars; ++v) {
          if (gg.w1[v] && gg.w2[v]) EXPECT_EQ(back[v], asg[v]);
        }
      }
    }
  }
}

TEST(SatProperties, TripleIntersectionBounds) {
  for (const auto& psi : enumerate_sl_sat(2, 6)) {
    const auto gg = build_gadget(psi);
    const auto t = triple_set(gg);
    const std::size_t base = 2 * gg.n_vars + 2 * gg.n_clauses;
    const auto od = optimal_codes(gg.graph, CodeKind::OD, 2000);
    const auto otd = optimal_codes(gg.graph, CodeKind::OTD, 2000);
    for (const auto& s : *od.all_optima) {
      EXPECT_GE(s.intersection_count(t), base - 1);
    }
    for (const auto& s : *otd.all_optima) {
      EXPECT_GE(s.intersection_count(t), base);
    }
  }
}

TEST(SatProperties, AuxiliaryGraphShape) {
  for (const auto& psi : enumerate_sl_sat(4, 6)) {
    const auto o = oracle::from(auxiliary_graph(psi));
    EXPECT_TRUE(oracle::bipartite(o));
    EXPECT_LE(oracle::max_degree(o), 3);
    const int g = oracle::girth(o);
    EXPECT_TRUE(g == -1 || g >= 6);
  }
}
