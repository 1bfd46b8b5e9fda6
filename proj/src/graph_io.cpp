#include "flowcut/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace flowcut {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

// Turns a directed arc list into a symmetric simple graph and counts the
// arcs whose reverse had to be added.
ParsedGraph finish(NodeId n, std::vector<Edge> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  ParsedGraph out;
  for (auto [u, v] : arcs)
    if (!std::binary_search(arcs.begin(), arcs.end(), Edge{v, u})) ++out.repaired_arcs;
  out.graph = UndirectedGraph::from_edges(n, arcs);
  out.external_ids.resize(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) out.external_ids[v] = v + 1;
  if (out.repaired_arcs)
    out.warnings.push_back("added " + std::to_string(out.repaired_arcs) + " missing reverse arcs");
  return out;
}

}  // namespace

ParsedGraph parse_metis(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::int64_t n = 0, header_edges = 0;
  std::vector<Edge> arcs;
  NodeId current = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    auto tok = split_ws(line);
    if (!have_header) {
      if (tok.empty()) continue;
      if (tok.size() < 2 || tok.size() > 4) throw ParseError(line_no, "malformed header, expected 'n m [fmt [ncon]]'");
      n = to_int(tok[0], line_no, "node count");
      header_edges = to_int(tok[1], line_no, "edge count");
      if (n < 0 || header_edges < 0 || n > std::numeric_limits<NodeId>::max())
        throw ParseError(line_no, "malformed header, counts out of range");
      if (tok.size() >= 3 && to_int(tok[2], line_no, "format code") != 0)
        throw ParseError(line_no, "weighted METIS graphs are not supported");
      have_header = true;
      continue;
    }
    if (current >= n) {
      if (tok.empty()) continue;
      throw ParseError(line_no, "more adjacency lines than nodes");
    }
    for (auto t : tok) {
      std::int64_t v = to_int(t, line_no, "neighbor id");
      if (v < 1 || v > n) throw ParseError(line_no, "neighbor id " + std::string(t) + " out of range [1, " + std::to_string(n) + "]");
      if (v - 1 == current) throw ParseError(line_no, "self-loop at node " + std::to_string(current + 1));
      arcs.emplace_back(current, static_cast<NodeId>(v - 1));
    }
    ++current;
  }
  if (!have_header) throw ParseError(line_no, "missing header line");
  ParsedGraph out = finish(static_cast<NodeId>(n), std::move(arcs));
  if (out.graph.edge_count() != header_edges)
    out.warnings.push_back("header announces " + std::to_string(header_edges) + " edges, found " +
                           std::to_string(out.graph.edge_count()));
  return out;
}

ParsedGraph parse_dimacs_gr(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_problem = false;
  std::int64_t n = 0;
  std::vector<Edge> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_problem) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "sp") throw ParseError(line_no, "malformed problem line, expected 'p sp n m'");
      n = to_int(tok[2], line_no, "node count");
      to_int(tok[3], line_no, "arc count");
      if (n < 0 || n > std::numeric_limits<NodeId>::max()) throw ParseError(line_no, "node count out of range");
      have_problem = true;
    } else if (tok[0] == "a") {
      if (!have_problem) throw ParseError(line_no, "arc before the 'p sp' line");
      if (tok.size() < 3) throw ParseError(line_no, "malformed arc line");
      std::int64_t u = to_int(tok[1], line_no, "arc tail"), v = to_int(tok[2], line_no, "arc head");
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "arc endpoint out of range");
      if (u != v) {
        arcs.emplace_back(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1));
        arcs.emplace_back(static_cast<NodeId>(v - 1), static_cast<NodeId>(u - 1));
      }
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_problem) throw ParseError(0, "missing 'p sp' line");
  // Arcs were symmetrized on the fly; directed inputs are not "repairs".
  ParsedGraph out = finish(static_cast<NodeId>(n), std::move(arcs));
  return out;
}

ParsedGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#' || tok[0].front() == '%') continue;
    if (tok.size() < 2) throw ParseError(line_no, "expected 'u v'");
    std::int64_t u = to_int(tok[0], line_no, "node id"), v = to_int(tok[1], line_no, "node id");
    if (u < 0 || v < 0) throw ParseError(line_no, "negative node id");
    if (u == v) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
    raw.emplace_back(u, v);
  }
  std::vector<std::int64_t> ids;
  for (auto [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto local = [&](std::int64_t x) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(local(u), local(v));
  ParsedGraph out;
  out.graph = UndirectedGraph::from_edges(static_cast<NodeId>(ids.size()), edges);
  out.external_ids = std::move(ids);
  return out;
}

ParsedGraph parse_metis(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_metis(in);
}
ParsedGraph parse_dimacs_gr(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs_gr(in);
}
ParsedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_metis(std::ostream& out, const UndirectedGraph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (NodeId v = 0; v < g.node_count(); ++v) {
    bool first = true;
    for (NodeId w : g.neighbors(v)) {
      if (!first) out << ' ';
      out << w + 1;
      first = false;
    }
    out << '\n';
  }
}

void write_order(std::ostream& out, std::span<const NodeId> order) {
  for (NodeId v : order) out << v << '\n';
}

std::vector<NodeId> read_order(std::istream& in, NodeId node_count) {
  std::vector<NodeId> order;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(node_count), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() != 1) throw ParseError(line_no, "expected one node id per line");
    std::int64_t v = to_int(tok[0], line_no, "node id");
    if (v < 0 || v >= node_count) throw ParseError(line_no, "node id " + std::to_string(v) + " out of range");
    if (seen[v]) throw ParseError(line_no, "node " + std::to_string(v) + " appears twice");
    seen[v] = 1;
    order.push_back(static_cast<NodeId>(v));
  }
  if (order.size() != static_cast<std::size_t>(node_count))
    throw ParseError(0, "order lists " + std::to_string(order.size()) + " nodes, graph has " +
                            std::to_string(node_count));
  return order;
}

void write_labels(std::ostream& out, std::span<const std::uint8_t> labels) {
  for (auto l : labels) out << static_cast<int>(l) << '\n';
}

std::vector<std::uint8_t> read_labels(std::istream& in, NodeId node_count, int max_label) {
  std::vector<std::uint8_t> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    std::int64_t l = to_int(tok[0], line_no, "label");
    if (tok.size() != 1 || l < 0 || l > max_label) throw ParseError(line_no, "invalid label");
    labels.push_back(static_cast<std::uint8_t>(l));
  }
  if (labels.size() != static_cast<std::size_t>(node_count)) throw ParseError(0, "label count does not match node count");
  return labels;
}

namespace detail {

void write_pareto_header(std::ostream& out, std::string_view size_column) {
  out << size_column << ",achieved_epsilon,small_side,large_side\n";
}

void write_pareto_row(std::ostream& out, std::int64_t size, double epsilon, std::int64_t small, std::int64_t large) {
  char eps[32];
  std::snprintf(eps, sizeof eps, "%.6f", epsilon);
  out << size << ',' << eps << ',' << small << ',' << large << '\n';
}

}  // namespace detail

}  // namespace flowcut
