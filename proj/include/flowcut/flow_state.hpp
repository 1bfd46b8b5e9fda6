#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "flowcut/cut.hpp"
#include "flowcut/flow_network.hpp"

namespace flowcut {

/// Residual unit-flow state of one st-bisection run.
///
/// Holds the four node sets of the core loop: the sources S and targets T
/// (called "cores" here) and the nodes reachable from them over
/// non-saturated arcs, S_R and T_R. S and T only ever grow. S_R and T_R
/// only grow between two augmentations and are reset to S and T by each
/// augmentation.
///
/// Growth is incremental: a reachable set is kept as a FIFO queue with a
/// scan cursor, so growing again only scans nodes added since the previous
/// growth. While scanning, saturated arcs that leave the set are collected
/// (C_S for the source side, C_T for the target side); the side cut is
/// obtained by filtering that list in place.
///
/// Target-side arcs are always reported in their real direction, i.e. the
/// target-side cut consists of arcs (u,v) with u outside and v inside T_R.
class FlowState {
 public:
  struct EpochStats {
    std::array<std::int64_t, 2> nodes_added{};
    std::array<std::int64_t, 2> arcs_scanned{};
    std::array<std::int64_t, 2> arcs_filtered{};
  };

  /// Throws std::invalid_argument if a set is empty, an id is out of range
  /// or the sets intersect. Grows S_R and T_R before returning.
  FlowState(const FlowNetwork& net, std::span<const NodeId> sources, std::span<const NodeId> targets);

  const FlowNetwork& network() const { return *net_; }
  std::int64_t flow_value() const { return flow_value_; }
  std::int8_t flow(ArcId a) const { return flow_[a]; }
  int residual(ArcId a) const { return net_->capacity(a) - flow_[a]; }

  bool in_core(Side s, NodeId v) const { return side(s).core_flag[v] != 0; }
  bool in_reachable(Side s, NodeId v) const { return side(s).reach_flag[v] != 0; }
  std::span<const std::uint8_t> reachable_flags(Side s) const { return side(s).reach_flag; }
  std::span<const NodeId> core_nodes(Side s) const { return side(s).core_list; }
  std::span<const NodeId> reachable_nodes(Side s) const { return side(s).reach_list; }
  NodeId core_size(Side s) const { return static_cast<NodeId>(side(s).core_list.size()); }
  NodeId reachable_size(Side s) const { return static_cast<NodeId>(side(s).reach_list.size()); }

  /// S_R and T_R intersect.
  bool has_augmenting_path() const { return meeting_ != kInvalidNode; }
  /// S and T intersect; the bisection loop is over.
  bool cores_meet() const { return cores_meet_; }
  bool reachable_closed(Side s) const { return side(s).cursor == side(s).reach_list.size(); }

  /// Resumes growth of S_R (forward) or T_R (backward) until the set is
  /// closed or meets the opposite reachable set. Returns the nodes added.
  std::vector<NodeId> grow_reachable(Side s);

  /// Grows both reachable sets, always continuing the one with the smaller
  /// pending frontier, until both are closed or they meet.
  void grow_both();

  /// Pushes one unit along the path through the meeting node, then resets
  /// S_R := S, T_R := T and regrows both. Throws std::logic_error without an
  /// augmenting path.
  void augment();

  /// S := S_R. Requires a closed S_R and no augmenting path. Returns the
  /// nodes that became part of S.
  std::vector<NodeId> assimilate(Side s);

  /// Arcs leaving S_R (or entering T_R). Requires a closed set and no
  /// augmenting path; throws std::logic_error otherwise. The result length
  /// equals flow_value().
  std::span<const ArcId> extract_side_cut(Side s);

  /// Adds `x` to S and S_R (or T and T_R) and grows that reachable set.
  void pierce(Side s, NodeId x);

  /// Saturated arcs collected for a side since the last augmentation,
  /// before filtering.
  std::span<const ArcId> collected_saturated_arcs(Side s) const { return side(s).saturated; }

  const EpochStats& epoch_stats() const { return stats_; }

 private:
  struct SideSets {
    std::vector<std::uint8_t> core_flag;
    std::vector<std::uint8_t> reach_flag;
    std::vector<NodeId> core_list;
    std::vector<NodeId> reach_list;  // discovery order
    std::size_t cursor = 0;          // reach_list[0, cursor) has been scanned
    std::size_t core_prefix = 0;     // reach_list[0, core_prefix) is in the core
    std::vector<ArcId> parent;       // residual arc that discovered the node
    std::vector<ArcId> saturated;    // C_S or C_T
  };

  SideSets& side(Side s) { return sides_[static_cast<int>(s)]; }
  const SideSets& side(Side s) const { return sides_[static_cast<int>(s)]; }

  void add_reachable(Side s, NodeId v, ArcId parent);
  void scan_next(Side s);
  void reset_reachable(Side s);
  void push_unit(ArcId a);

  const FlowNetwork* net_;
  std::vector<std::int8_t> flow_;
  std::array<SideSets, 2> sides_;
  NodeId meeting_ = kInvalidNode;
  bool cores_meet_ = false;
  std::int64_t flow_value_ = 0;
  EpochStats stats_;
};

}  // namespace flowcut
