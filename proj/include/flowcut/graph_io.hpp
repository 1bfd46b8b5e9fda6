#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flowcut/cut.hpp"
#include "flowcut/graph.hpp"

namespace flowcut {

/// Malformed graph or result file. `line()` is 1-based, 0 when the error is
/// not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedGraph {
  UndirectedGraph graph;
  /// external_ids[v] is the id node v carries in the input file.
  std::vector<std::int64_t> external_ids;
  /// Arcs that were added because their reverse was missing.
  std::size_t repaired_arcs = 0;
  std::vector<std::string> warnings;
};

/// Unweighted METIS: header "n m [fmt]", then line i lists the 1-based
/// neighbors of node i. Lines starting with '%' are comments.
ParsedGraph parse_metis(std::istream& in);
ParsedGraph parse_metis(std::string_view text);

/// DIMACS shortest-path format ("p sp n m" then "a u v w"). Weights are
/// ignored and parallel/antiparallel arcs collapse into one edge.
ParsedGraph parse_dimacs_gr(std::istream& in);
ParsedGraph parse_dimacs_gr(std::string_view text);

/// Whitespace separated "u v" pairs of non-negative ids, '#' comments.
/// Ids are rebased to 0..n-1 in ascending order of the external id.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(std::string_view text);

void write_metis(std::ostream& out, const UndirectedGraph& g);

/// One row per Pareto member in increasing size; epsilon with 6 decimals.
template <ParetoPoint T>
void write_pareto_csv(std::ostream& out, const ParetoSet<T>& set, std::string_view size_column = "cut_size");

/// One node id per line; line i holds the node eliminated at position i.
void write_order(std::ostream& out, std::span<const NodeId> order);
/// Reads an order file and checks it is a permutation of 0..node_count-1.
std::vector<NodeId> read_order(std::istream& in, NodeId node_count);

/// One small integer label per node and line (0/1 for cuts, 0/1/2 for
/// separators with 2 marking separator nodes).
void write_labels(std::ostream& out, std::span<const std::uint8_t> labels);
std::vector<std::uint8_t> read_labels(std::istream& in, NodeId node_count, int max_label);

namespace detail {
void write_pareto_row(std::ostream& out, std::int64_t size, double epsilon, std::int64_t small, std::int64_t large);
void write_pareto_header(std::ostream& out, std::string_view size_column);
}  // namespace detail

template <ParetoPoint T>
void write_pareto_csv(std::ostream& out, const ParetoSet<T>& set, std::string_view size_column) {
  detail::write_pareto_header(out, size_column);
  for (const T& item : set)
    detail::write_pareto_row(out, item.size(), item.achieved_epsilon, item.small_side, item.large_side);
}

}  // namespace flowcut
