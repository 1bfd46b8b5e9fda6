#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flowcut/bisection.hpp"
#include "flowcut/cut.hpp"
#include "flowcut/flow_network.hpp"
#include "flowcut/graph.hpp"

namespace flowcut {

/// Node-split digraph: original node x becomes in-node 2x and out-node
/// 2x+1, joined by an internal arc; every original arc (x,y) becomes the
/// external arc (x_out, y_in).
struct ExpandedDigraph {
  FlowNetwork network;
  NodeId original_node_count = 0;

  static constexpr NodeId in_node(NodeId x) { return 2 * x; }
  static constexpr NodeId out_node(NodeId x) { return 2 * x + 1; }
  static constexpr NodeId original(NodeId v) { return v / 2; }
  static constexpr bool is_out_node(NodeId v) { return (v & 1) != 0; }

  /// Internal arcs are the first n input arcs, external arcs follow in the
  /// order of the original graph's arcs.
  bool is_internal(ArcId network_arc) const {
    const ArcId in = network.input_arc(network_arc);
    return in != kInvalidArc && in < original_node_count;
  }
  ArcId internal_count() const { return original_node_count; }
  ArcId external_count() const { return network.real_arc_count() - original_node_count; }
};

ExpandedDigraph expand(const UndirectedGraph& g);

/// Node separator (V1, V2, Q). Side 1 holds the source terminal.
struct Separator {
  std::vector<NodeId> separator_nodes;  // ascending
  std::int64_t side1 = 0;
  std::int64_t side2 = 0;
  std::int64_t small_side = 0;
  std::int64_t large_side = 0;
  double achieved_epsilon = 0;
  double expansion = 0;
  /// Per original node: 0 for V1, 1 for V2, 2 for Q.
  std::vector<std::uint8_t> labels;
  /// Some side induces more than one connected component.
  bool sides_disconnected = false;

  std::int64_t size() const { return static_cast<std::int64_t>(separator_nodes.size()); }
};

/// Imbalance over the nodes outside the separator; 0 if both sides are empty.
double separator_epsilon(std::int64_t side1, std::int64_t side2);

/// Turns a cut of the expanded digraph into a separator.
///
/// `source_side` flags the expanded nodes on the source side; it must
/// contain out_node(s) and exclude in_node(t). Internal cut arcs put their
/// node into Q. For an external cut arc joining the two sides, the endpoint
/// on the side with more original nodes goes into Q (the head on ties),
/// unless that endpoint is s or t and the other one is not. A node whose
/// out-copy is on the source side but whose in-copy is not is counted on
/// `emitted`'s side. Throws std::invalid_argument on an invalid cut.
Separator derive_separator(const UndirectedGraph& g, std::span<const std::uint8_t> source_side, Side emitted,
                           NodeId s, NodeId t);

/// Counts the separator derived above directly from the flow state, in time
/// linear in the cut size.
class NodeSeparatorModel final : public CutModel {
 public:
  NodeSeparatorModel(NodeId original_node_count, NodeId s, NodeId t);
  int core_weight(Side side, NodeId v) const override;
  PartitionCounts count(const FlowState& state, Side side, std::span<const ArcId> cut,
                        std::int64_t weighted_core) override;

 private:
  NodeId n_;
  NodeId s_;
  NodeId t_;
  std::vector<std::uint32_t> chosen_;  // emission marker per original node
  std::uint32_t epoch_ = 0;
};

/// Every separator emitted for one pair (s, t), in emission order.
std::vector<Separator> enumerate_separators(const UndirectedGraph& g, NodeId s, NodeId t, double epsilon);

/// Pareto set of separators over `pairs` random st-pairs.
ParetoSet<Separator> separator_pareto(const UndirectedGraph& g, const MultiOptions& options);

}  // namespace flowcut
