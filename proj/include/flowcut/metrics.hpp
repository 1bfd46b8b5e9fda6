#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "flowcut/graph.hpp"

namespace flowcut {

/// Chordal supergraph produced by contracting nodes along an order.
struct EliminationResult {
  std::vector<NodeId> rank;                 // rank[v] = position of v in the order
  std::vector<std::vector<NodeId>> upward;  // higher neighbors of v, by ascending rank
  std::vector<NodeId> etree_parent;         // lowest-ranked upward neighbor or kInvalidNode
  std::int64_t original_edges = 0;
  std::int64_t supergraph_arcs = 0;
  std::int64_t fill_in = 0;
  int treewidth_bound = 0;
};

/// Throws std::invalid_argument if `order` is not a permutation of the nodes.
EliminationResult elimination_game(const UndirectedGraph& g, std::span<const NodeId> order);

/// Triangles of the supergraph. Every upward neighborhood is a clique, so
/// each triangle is counted once at its lowest-ranked node.
std::int64_t count_triangles(const EliminationResult& r);

/// Longest root path of the elimination tree, in nodes.
int elimination_tree_height(const EliminationResult& r);

struct SearchSpaceSample {
  NodeId count = 0;
  std::uint64_t seed = 0;
};

struct SearchSpaceStats {
  NodeId evaluated = 0;
  double avg_nodes = 0;
  double avg_arcs = 0;
  std::int64_t max_nodes = 0;
  std::int64_t max_arcs = 0;
};

/// Sizes of the upward search spaces. Without `sample` every node is a
/// start node; otherwise a uniform subset of `sample->count` nodes is used.
/// Throws std::invalid_argument if the sample is larger than the graph.
SearchSpaceStats search_space_stats(const EliminationResult& r, std::optional<SearchSpaceSample> sample = {});

struct MetricsReport {
  NodeId nodes = 0;
  std::int64_t edges = 0;
  std::int64_t supergraph_arcs = 0;
  std::int64_t fill_in = 0;
  std::int64_t triangles = 0;
  int treewidth_bound = 0;
  int elimination_tree_height = 0;
  bool sampled = false;
  SearchSpaceStats search_space;
};

MetricsReport evaluate_order(const UndirectedGraph& g, std::span<const NodeId> order,
                             std::optional<SearchSpaceSample> sample = {});

/// key=value lines, one metric per line.
void write_report(std::ostream& out, const MetricsReport& report);

}  // namespace flowcut
