#include "flowcut/flow_state.hpp"

#include <algorithm>
#include <stdexcept>

namespace flowcut {

FlowState::FlowState(const FlowNetwork& net, std::span<const NodeId> sources, std::span<const NodeId> targets)
    : net_(&net), flow_(static_cast<std::size_t>(net.arc_count()), 0) {
  if (sources.empty() || targets.empty()) throw std::invalid_argument("terminal sets must be nonempty");
  const auto n = static_cast<std::size_t>(net.node_count());
  for (auto& s : sides_) {
    s.core_flag.assign(n, 0);
    s.reach_flag.assign(n, 0);
    s.parent.assign(n, kInvalidArc);
  }
  auto seed = [&](Side which, std::span<const NodeId> nodes) {
    SideSets& s = side(which);
    for (NodeId v : nodes) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("terminal out of range");
      if (s.core_flag[v]) continue;
      s.core_flag[v] = s.reach_flag[v] = 1;
      s.core_list.push_back(v);
      s.reach_list.push_back(v);
    }
    s.core_prefix = s.reach_list.size();
  };
  seed(Side::source, sources);
  seed(Side::target, targets);
  for (NodeId v : side(Side::source).core_list)
    if (side(Side::target).core_flag[v]) throw std::invalid_argument("source and target sets overlap");
  grow_both();
}

void FlowState::add_reachable(Side s, NodeId v, ArcId parent) {
  SideSets& me = side(s);
  me.reach_flag[v] = 1;
  me.parent[v] = parent;
  me.reach_list.push_back(v);
  ++stats_.nodes_added[static_cast<int>(s)];
  if (meeting_ == kInvalidNode && side(opposite(s)).reach_flag[v]) meeting_ = v;
}

void FlowState::scan_next(Side s) {
  SideSets& me = side(s);
  const NodeId x = me.reach_list[me.cursor++];
  const FlowNetwork& net = *net_;
  auto& scanned = stats_.arcs_scanned[static_cast<int>(s)];
  for (ArcId a = net.begin_arc(x); a < net.end_arc(x); ++a) {
    ++scanned;
    const NodeId y = net.head(a);
    // Forward growth follows a = (x,y); backward growth follows the twin
    // (y,x) into the set.
    const ArcId step = s == Side::source ? a : net.twin(a);
    if (me.reach_flag[y]) continue;
    if (residual(step) > 0) {
      add_reachable(s, y, step);
      if (meeting_ != kInvalidNode) return;
    } else if (net.capacity(step) > 0) {
      me.saturated.push_back(step);
    }
  }
}

std::vector<NodeId> FlowState::grow_reachable(Side s) {
  SideSets& me = side(s);
  const std::size_t before = me.reach_list.size();
  while (meeting_ == kInvalidNode && me.cursor < me.reach_list.size()) scan_next(s);
  return {me.reach_list.begin() + static_cast<std::ptrdiff_t>(before), me.reach_list.end()};
}

void FlowState::grow_both() {
  while (meeting_ == kInvalidNode) {
    const std::size_t ps = side(Side::source).reach_list.size() - side(Side::source).cursor;
    const std::size_t pt = side(Side::target).reach_list.size() - side(Side::target).cursor;
    if (ps == 0 && pt == 0) break;
    scan_next(ps != 0 && (pt == 0 || ps <= pt) ? Side::source : Side::target);
  }
}

void FlowState::push_unit(ArcId a) {
  ++flow_[a];
  --flow_[net_->twin(a)];
}

void FlowState::reset_reachable(Side s) {
  SideSets& me = side(s);
  for (NodeId v : me.reach_list)
    if (!me.core_flag[v]) {
      me.reach_flag[v] = 0;
      me.parent[v] = kInvalidArc;
    }
  me.reach_list = me.core_list;
  me.cursor = 0;
  me.core_prefix = me.reach_list.size();
  me.saturated.clear();
}

void FlowState::augment() {
  if (meeting_ == kInvalidNode) throw std::logic_error("augment() without an augmenting path");
  const FlowNetwork& net = *net_;
  const SideSets& src = side(Side::source);
  const SideSets& dst = side(Side::target);
  for (NodeId y = meeting_; !src.core_flag[y];) {
    const ArcId a = src.parent[y];
    push_unit(a);
    y = net.tail(a);
  }
  for (NodeId y = meeting_; !dst.core_flag[y];) {
    const ArcId a = dst.parent[y];
    push_unit(a);
    y = net.head(a);
  }
  ++flow_value_;
  meeting_ = kInvalidNode;
  reset_reachable(Side::source);
  reset_reachable(Side::target);
  stats_ = {};
  grow_both();
}

std::vector<NodeId> FlowState::assimilate(Side s) {
  if (meeting_ != kInvalidNode || !reachable_closed(s))
    throw std::logic_error("assimilate() requires a closed reachable set and no augmenting path");
  SideSets& me = side(s);
  const SideSets& other = side(opposite(s));
  std::vector<NodeId> added;
  for (std::size_t i = me.core_prefix; i < me.reach_list.size(); ++i) {
    const NodeId v = me.reach_list[i];
    if (me.core_flag[v]) continue;
    me.core_flag[v] = 1;
    me.core_list.push_back(v);
    added.push_back(v);
    if (other.core_flag[v]) cores_meet_ = true;
  }
  me.core_prefix = me.reach_list.size();
  return added;
}

std::span<const ArcId> FlowState::extract_side_cut(Side s) {
  if (meeting_ != kInvalidNode || !reachable_closed(s))
    throw std::logic_error("extract_side_cut() requires a closed reachable set and no augmenting path");
  SideSets& me = side(s);
  const FlowNetwork& net = *net_;
  auto outside = [&](ArcId a) {
    const NodeId far = s == Side::source ? net.head(a) : net.tail(a);
    return !me.reach_flag[far];
  };
  const auto kept = std::stable_partition(me.saturated.begin(), me.saturated.end(), outside);
  const auto keep_count = static_cast<std::size_t>(kept - me.saturated.begin());
  stats_.arcs_filtered[static_cast<int>(s)] += static_cast<std::int64_t>(me.saturated.size() - keep_count);
  me.saturated.resize(keep_count);
  return me.saturated;
}

void FlowState::pierce(Side s, NodeId x) {
  SideSets& me = side(s);
  if (me.core_flag[x]) throw std::logic_error("piercing node is already a terminal of that side");
  const bool prefix_is_core = me.core_prefix == me.reach_list.size();
  me.core_flag[x] = 1;
  me.core_list.push_back(x);
  if (side(opposite(s)).core_flag[x]) cores_meet_ = true;
  if (!me.reach_flag[x]) add_reachable(s, x, kInvalidArc);
  if (prefix_is_core && me.reach_list.back() == x) me.core_prefix = me.reach_list.size();
  if (!cores_meet_) grow_reachable(s);
}

}  // namespace flowcut
