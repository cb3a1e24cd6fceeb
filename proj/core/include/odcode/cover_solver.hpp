#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "odcode/clutter.hpp"

namespace odcode {

struct CoverResult {
  std::size_t value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  // Filled when enumeration was requested, sorted by size_lex_less.
  std::optional<std::vector<VertexSet>> all_optima;
  // More than `cap` optima exist; all_optima holds the first cap found.
  bool truncated = false;
};

inline constexpr std::size_t kDefaultEnumerationCap = 10000;

bool hits_all(const VertexSet& s, const std::vector<VertexSet>& edges);

// Max-coverage greedy, ties broken by the lowest vertex index.
VertexSet greedy_cover(const Clutter& c);

// Exact minimum cover by branch and bound.
CoverResult min_cover(const Clutter& c, bool enumerate = false,
                      std::size_t cap = kDefaultEnumerationCap);

// n - q + 1 for the complete q-rose on n vertices; requires 2 <= q < n.
std::size_t tau_q_rose(std::size_t n, std::size_t q);

}  // namespace odcode
