#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "odcode/families.hpp"

namespace odcode::cli {

struct ReportRow {
  std::string table;
  std::string instance;
  std::string quantity;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReportOptions {
  std::size_t max_k = 0;  // 0: no bound beyond the order limit
  std::uint64_t seed = kDefaultSeed;
};

// p4, small-graphs, families, clutters, relations, sat, roses, polyhedra, oracle.
const std::vector<std::string>& report_tables();
// Throws std::invalid_argument for an unknown table; "all" runs every table.
std::vector<ReportRow> build_report(const std::string& table, const ReportOptions& opt);

}  // namespace odcode::cli
