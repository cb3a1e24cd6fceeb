#pragma once

#include <map>
#include <string>
#include <vector>

#include "odcode/code_kind.hpp"
#include "odcode/cover_solver.hpp"
#include "odcode/graph.hpp"

namespace odcode {

inline constexpr std::size_t kMaxReportedViolations = 100;

struct UnseparatedPair {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet trace;  // the shared trace
};

struct VerificationReport {
  CodeKind kind = CodeKind::OD;
  bool valid = true;
  std::vector<Vertex> undominated;
  std::vector<UnseparatedPair> unseparated;
  // More than kMaxReportedViolations violations exist.
  bool truncated = false;
};

// Works on any graph; inadmissible graphs simply fail.
VerificationReport verify(const Graph& g, const VertexSet& code, CodeKind kind);
bool is_code(const Graph& g, const VertexSet& code, CodeKind kind);

// Vertices w with N(w) and the code disjoint.
std::vector<Vertex> open_undominated(const Graph& g, const VertexSet& code);

struct GammaResult {
  std::size_t value = 0;
  VertexSet witness;
};

// Minimum cover of the kind's clutter. Throws InadmissibleGraph.
GammaResult gamma(const Graph& g, CodeKind kind);
// Same solve with enumeration of all minimum codes (up to cap).
CoverResult optimal_codes(const Graph& g, CodeKind kind, std::size_t cap = kDefaultEnumerationCap);

inline constexpr std::size_t kBruteForceMaxOrder = 20;
// Scans subsets by increasing size with is_code(). Requires n <= 20.
GammaResult brute_force_gamma(const Graph& g, CodeKind kind);

enum class RelationStatus { Pass, Fail, NotApplicable };
std::string_view to_string(RelationStatus s);

struct Relation {
  std::string name;
  RelationStatus status = RelationStatus::NotApplicable;
  std::string detail;
};

struct RelationReport {
  std::map<CodeKind, std::size_t> gammas;
  VertexSet od_witness;
  std::vector<Relation> relations;
  bool ok() const;
};

// Evaluates the order bounds and the inequalities between the OD number and
// the OTD, LD and LTD numbers. Throws InadmissibleGraph unless OD-admissible.
RelationReport check_relations(const Graph& g);

std::size_t ceil_log2(std::size_t n);

}  // namespace odcode
