#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "odcode/code_kind.hpp"
#include "odcode/graph.hpp"

namespace odcode {

// DIMACS convention: variable i (0-based) appears as i+1 or -(i+1).
using Literal = int;

inline std::size_t var_of(Literal l) { return static_cast<std::size_t>(l < 0 ? -l : l) - 1; }
inline bool is_negative(Literal l) { return l < 0; }

struct LsatInstance {
  std::size_t n_vars = 0;
  // Each clause sorted by (variable, positive first).
  std::vector<std::vector<Literal>> clauses;
  bool saturated = false;
};

struct LsatViolation {
  std::string rule;  // e.g. "literal-in-3-clauses", "shared-pair"
  std::string detail;
};

class LsatError : public std::invalid_argument {
 public:
  LsatError(std::string rule, const std::string& detail)
      : std::invalid_argument(rule + ": " + detail), rule_(std::move(rule)) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

// Structural rules: clause-too-long, empty-clause, variable-out-of-range,
// duplicate-literal, complementary-literals, literal-in-3-clauses,
// shared-pair, duplicate-clause.
std::vector<LsatViolation> lsat_violations(const LsatInstance& psi);
// Sorts clause literals, throws LsatError on the first violation and sets the
// saturated flag.
LsatInstance normalize(LsatInstance psi);

// "p lsat <n> <m>" header, then m clauses each terminated by 0. Lines
// starting with 'c' or '#' are comments. Throws LsatError (rule "syntax" for
// malformed text).
LsatInstance parse_lsat(std::string_view text);
std::string format_lsat(const LsatInstance& psi);

// Every occurring literal occurs in exactly two clauses.
bool is_saturated(const LsatInstance& psi);
// For each literal occurring once, adds a fresh y with clauses (x or y), (y).
LsatInstance saturate(const LsatInstance& psi);

using Assignment = std::vector<bool>;
bool satisfies(const LsatInstance& psi, const Assignment& a);
inline constexpr std::size_t kBruteForceSatMaxVars = 24;
// First satisfying assignment in binary counting order (variable 0 lowest).
std::optional<Assignment> brute_force_sat(const LsatInstance& psi);

enum class GadgetRole { W1, W2, V1, V2, V3, U1, U2, U3 };

struct RoleTag {
  GadgetRole role;
  std::size_t index;  // variable for W/V roles, clause for U roles
};

struct GadgetGraph {
  Graph graph;
  LsatInstance formula;
  std::vector<RoleTag> roles;  // per vertex
  std::size_t n_vars = 0;
  std::size_t n_clauses = 0;
  std::vector<std::optional<Vertex>> w1, w2;
  std::vector<Vertex> v1, v2, v3;
  std::vector<Vertex> u1, u2, u3;

  std::size_t od_target() const { return 3 * n_vars + 2 * n_clauses - 1; }
  std::size_t otd_target() const { return 3 * n_vars + 2 * n_clauses; }
};

std::string role_label(const RoleTag& tag);

// Requires a saturated instance in which every variable occurs.
GadgetGraph build_gadget(const LsatInstance& psi);

// Code of size 3n+2m-1 (OD) or 3n+2m (OTD) built from a satisfying
// assignment. x0 defaults to variable 0.
VertexSet assignment_to_code(const GadgetGraph& gg, const Assignment& a, CodeKind kind,
                             std::optional<std::size_t> x0 = std::nullopt);
// x = (w1 of x in S). Throws std::invalid_argument unless exactly one of the
// two w vertices of every variable is in S, or when the result does not
// satisfy the formula.
Assignment code_to_assignment(const GadgetGraph& gg, const VertexSet& s);

// Vertices of all v- and u-triples.
VertexSet triple_set(const GadgetGraph& gg);

// Clause x literal incidence graph: clauses first, then occurring literals.
Graph auxiliary_graph(const LsatInstance& psi);

// {"schema":1,"n_vars":..,"n_clauses":..,"roles":{"0":"w1_x1",..}}
std::string gadget_roles_json(const GadgetGraph& gg);

// Non-isomorphic (variable renaming and polarity flips) instances with
// 1..max_vars variables, all occurring, and 1..max_clauses clauses. Only
// saturated ones unless saturated_only is false.
std::vector<LsatInstance> enumerate_sl_sat(std::size_t max_vars, std::size_t max_clauses,
                                           bool saturated_only = true);

struct RoundTripReport {
  LsatInstance formula;  // saturated
  bool satisfiable = false;
  std::optional<Assignment> model;
  std::size_t gamma_od = 0;
  std::size_t gamma_otd = 0;
  std::size_t od_target = 0;
  std::size_t otd_target = 0;
  bool lower_bounds_hold = false;
  bool equivalence_holds = false;
  bool structure_ok = false;
  bool auxiliary_ok = false;
  bool constructed_codes_ok = true;  // vacuous when unsatisfiable
  bool extraction_ok = true;         // vacuous when targets are missed
  bool ok() const {
    return lower_bounds_hold && equivalence_holds && structure_ok && auxiliary_ok &&
           constructed_codes_ok && extraction_ok;
  }
};

// Saturates when needed, then checks every property of the reduction on psi.
RoundTripReport sat_roundtrip(const LsatInstance& psi);

}  // namespace odcode
