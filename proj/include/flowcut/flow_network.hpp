#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flowcut/graph.hpp"

namespace flowcut {

/// Directed unit-capacity network in adjacency-array form.
///
/// Every arc has a twin running the other way. For an undirected graph the
/// twin of (u,v) is the real arc (v,u) and both have capacity 1, so pushing
/// flow against existing flow cancels it. For a digraph each input arc gets
/// a capacity-0 twin that only carries residual capacity.
class FlowNetwork {
 public:
  FlowNetwork() = default;

  static FlowNetwork from_undirected(const UndirectedGraph& g);
  /// One network arc of capacity 1 per entry of `arcs`. Self-loops are
  /// rejected; parallel arcs are kept.
  static FlowNetwork from_arcs(NodeId node_count, std::span<const Edge> arcs);

  NodeId node_count() const { return static_cast<NodeId>(first_out_.size() - 1); }
  /// Including capacity-0 twins.
  ArcId arc_count() const { return static_cast<ArcId>(head_.size()); }
  ArcId real_arc_count() const { return real_arc_count_; }

  ArcId begin_arc(NodeId v) const { return first_out_[v]; }
  ArcId end_arc(NodeId v) const { return first_out_[v + 1]; }
  NodeId head(ArcId a) const { return head_[a]; }
  NodeId tail(ArcId a) const { return head_[twin_[a]]; }
  ArcId twin(ArcId a) const { return twin_[a]; }
  std::int8_t capacity(ArcId a) const { return capacity_[a]; }

  /// Index into the `arcs` span given to from_arcs; for from_undirected the
  /// network reuses the graph's arc ids, so this is the identity.
  /// kInvalidArc for twins that only exist for residual capacity.
  ArcId input_arc(ArcId a) const { return input_arc_[a]; }

 private:
  std::vector<ArcId> first_out_{0};
  std::vector<NodeId> head_;
  std::vector<ArcId> twin_;
  std::vector<std::int8_t> capacity_;
  std::vector<ArcId> input_arc_;
  ArcId real_arc_count_ = 0;
};

}  // namespace flowcut
