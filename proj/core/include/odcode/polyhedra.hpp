#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "odcode/clutter.hpp"
#include "odcode/graph.hpp"

namespace odcode {

// sum of x_v over support >= rhs
struct RankConstraint {
  VertexSet support;
  std::size_t rhs = 1;
  std::string provenance;
};

struct ConstraintSystem {
  std::size_t n = 0;
  // x_v = 1. Kept explicit rather than substituted into the inequalities.
  std::vector<Vertex> equalities;
  std::vector<RankConstraint> inequalities;
  std::string family;
};

// x(V') >= |V'| - q + 1 for every V' with |V'| >= q; requires 2 <= q < n.
ConstraintSystem qrose_system(std::size_t n, std::size_t q);

enum class FamilyHint {
  Clique,
  Matching,
  Fan,
  HalfGraph,
  ThickSpider,
  ThinSpider,
  ExtendedThinSpider,
  Sunlet,
  AlmostCompleteThinSun,
  Generic,
};

std::string_view hint_name(FamilyHint h);
std::optional<FamilyHint> hint_from_name(std::string_view name);

// Constraint system of the OD covering polyhedron. Named hints need the graph
// exactly as the family generator builds it (order, edges and labels) and
// throw std::invalid_argument otherwise. Generic emits the forced vertices as
// equalities and one rhs-1 inequality per remaining clutter edge.
ConstraintSystem od_polyhedron_system(const Graph& g, FamilyHint hint);

bool satisfies(const ConstraintSystem& sys, const VertexSet& x);
// Index into equalities first, then inequalities; nullopt when satisfied.
std::optional<std::size_t> first_violation(const ConstraintSystem& sys, const VertexSet& x);
std::string describe_constraint(const ConstraintSystem& sys, std::size_t index, const Graph* g = nullptr);

inline constexpr std::size_t kExhaustiveMaxOrder = 16;

struct ValidityReport {
  bool valid = true;
  bool exhaustive = true;  // false: only minimum covers were checked
  std::size_t covers_checked = 0;
  std::optional<VertexSet> counterexample;
  std::optional<std::size_t> violated;
};

struct TightnessReport {
  // Per inequality: a cover meeting it with equality.
  std::vector<std::optional<VertexSet>> witnesses;
  bool all_tight() const;
  std::vector<std::size_t> never_tight() const;
};

struct HullReport {
  bool equivalent = true;
  std::size_t points = 0;
  std::optional<VertexSet> mismatch;
  bool mismatch_is_cover = false;
};

// Every 0/1 cover of c satisfies sys. Exhaustive for n <= 16, otherwise over
// the enumerated minimum covers.
ValidityReport check_validity(const ConstraintSystem& sys, const Clutter& c);
// Looks among the minimum covers first, then all covers (n <= 16).
TightnessReport check_tightness(const ConstraintSystem& sys, const Clutter& c);
// 0/1 points of sys coincide with the covers of c. Throws when n > n_max.
HullReport integer_hull_equiv(const ConstraintSystem& sys, const Clutter& c,
                              std::size_t n_max = kExhaustiveMaxOrder);

// Minimum of sum x over 0/1 points of sys, by enumeration (n <= 24).
std::size_t system_optimum(const ConstraintSystem& sys);

}  // namespace odcode
