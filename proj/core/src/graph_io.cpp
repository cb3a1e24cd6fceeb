#include "odcode/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <vector>

namespace odcode {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" +
                         std::string(tok) + "'",
                     line);
  }
  return value;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  Labels labels;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto toks = split_ws(line);
      if (!toks.empty() && toks[0] == "#role") {
        if (toks.size() != 3) throw ParseError("role comment must be '#role <vertex> <label>'", line_no);
        labels[parse_count(toks[1], line_no, "role vertex")] = std::string(toks[2]);
      }
      continue;
    }
    const auto toks = split_ws(line);
    if (toks.size() != 2) throw ParseError("expected exactly two integers", line_no);
    if (!have_header) {
      n = parse_count(toks[0], line_no, "vertex count");
      m = parse_count(toks[1], line_no, "edge count");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    const auto u = parse_count(toks[0], line_no, "edge endpoint");
    const auto v = parse_count(toks[1], line_no, "edge endpoint");
    if (edges.size() == m) throw ParseError("more edge lines than the header announces", line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    if (u > v) throw ParseError("edge endpoints must satisfy u < v", line_no);
    if (v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", line_no);
    edges.push_back({u, v});
  }
  if (!have_header) throw ParseError("missing header line 'n m'");
  if (edges.size() != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges but " +
                     std::to_string(edges.size()) + " were given");
  }
  for (const auto& [v, l] : labels) {
    if (v >= n) throw ParseError("role on vertex " + std::to_string(v) + " out of range");
  }
  try {
    return Graph(n, edges, std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_graph_text(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [v, l] : g.labels()) os << "#role " << v << ' ' << l << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
      edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    }
    Labels labels;
    if (j.contains("labels")) {
      for (const auto& [key, value] : j.at("labels").items()) {
        labels[parse_count(key, 0, "label key")] = value.get<std::string>();
      }
    }
    return Graph(n, edges, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_graph_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  auto labels = nlohmann::ordered_json::object();
  for (const auto& [v, l] : g.labels()) labels[std::to_string(v)] = l;
  j["labels"] = std::move(labels);
  return j.dump() + "\n";
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

}  // namespace odcode
