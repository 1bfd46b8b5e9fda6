#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flowcut {

using NodeId = std::int32_t;
using ArcId = std::int32_t;

inline constexpr NodeId kInvalidNode = -1;
inline constexpr ArcId kInvalidArc = -1;

using Edge = std::pair<NodeId, NodeId>;

/// Simple symmetric graph in adjacency-array form.
///
/// Every undirected edge {u,v} is stored as the two arcs (u,v) and (v,u).
/// Neighbor lists are sorted ascending; there are no self-loops and no
/// duplicate arcs. Instances are immutable after construction and can be
/// shared between threads.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Builds a graph on `node_count` nodes. Self-loops are dropped and
  /// duplicate or antiparallel edges collapse to one undirected edge.
  static UndirectedGraph from_edges(NodeId node_count, std::span<const Edge> edges);

  NodeId node_count() const { return static_cast<NodeId>(first_out_.empty() ? 0 : first_out_.size() - 1); }
  ArcId arc_count() const { return static_cast<ArcId>(heads_.size()); }
  std::int64_t edge_count() const { return arc_count() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {heads_.data() + first_out_[v], heads_.data() + first_out_[v + 1]};
  }
  int degree(NodeId v) const { return first_out_[v + 1] - first_out_[v]; }
  ArcId first_arc(NodeId v) const { return first_out_[v]; }
  NodeId head(ArcId a) const { return heads_[a]; }

  bool has_edge(NodeId u, NodeId v) const;

  /// Lists every undirected edge once as (u,v) with u < v.
  std::vector<Edge> edges() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::vector<ArcId> first_out_;
  std::vector<NodeId> heads_;
};

/// Returns a description of the first violated invariant, if any.
/// Used on graphs built outside of `from_edges` and in tests.
std::optional<std::string> check_invariants(NodeId node_count, std::span<const ArcId> first_out,
                                            std::span<const NodeId> heads);
std::optional<std::string> check_invariants(const UndirectedGraph& g);

/// Subgraph induced by `nodes` (global ids, any order). Local node i
/// corresponds to global node `nodes[i]`.
UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const NodeId> nodes);

/// Connected components as lists of node ids, each sorted ascending, the
/// list ordered by smallest contained node.
std::vector<std::vector<NodeId>> connected_components(const UndirectedGraph& g);

bool is_connected(const UndirectedGraph& g);

/// True iff `nodes` (membership flags) induce a connected subgraph.
/// An empty set counts as connected.
bool induces_connected_subgraph(const UndirectedGraph& g, std::span<const std::uint8_t> member);

}  // namespace flowcut
