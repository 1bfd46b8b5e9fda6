#include "flowcut/piercing.hpp"

#include <stdexcept>
#include <tuple>

namespace flowcut {

namespace {

// Multi-source BFS. `backward` walks arcs against their direction.
std::vector<std::int32_t> bfs(const FlowNetwork& net, std::span<const NodeId> roots, bool backward) {
  std::vector<std::int32_t> dist(static_cast<std::size_t>(net.node_count()), DistanceTables::unreachable);
  std::vector<NodeId> queue;
  queue.reserve(dist.size());
  for (NodeId r : roots) {
    if (r < 0 || r >= net.node_count()) throw std::invalid_argument("terminal out of range");
    if (dist[r] != 0) {
      dist[r] = 0;
      queue.push_back(r);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    for (ArcId a = net.begin_arc(x); a < net.end_arc(x); ++a) {
      const ArcId used = backward ? net.twin(a) : a;
      const NodeId y = net.head(a);
      if (net.capacity(used) <= 0 || dist[y] != DistanceTables::unreachable) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace

DistanceTables precompute_distances(const FlowNetwork& net, std::span<const NodeId> sources,
                                    std::span<const NodeId> targets) {
  if (sources.empty() || targets.empty()) throw std::invalid_argument("terminal sets must be nonempty");
  return {bfs(net, sources, false), bfs(net, targets, true)};
}

ArcId pick_piercing_arc(const FlowNetwork& net, std::span<const ArcId> cut, Side side,
                        std::span<const std::uint8_t> opposite_reachable, const DistanceTables& tables) {
  if (cut.empty()) throw std::invalid_argument("cannot pierce an empty cut");
  // Larger key wins: (avoids augmenting path, finite score, score, -node, -arc).
  using Key = std::tuple<bool, bool, std::int64_t, NodeId, ArcId>;
  auto key = [&](ArcId a) {
    const NodeId p = piercing_node(net, a, side);
    const std::int32_t ds = tables.dist_from_s[p], dt = tables.dist_to_t[p];
    const bool finite = ds != DistanceTables::unreachable && dt != DistanceTables::unreachable;
    std::int64_t score = 0;
    if (finite) score = side == Side::source ? std::int64_t{dt} - ds : std::int64_t{ds} - dt;
    return Key{opposite_reachable[p] == 0, finite, score, -p, -a};
  };
  ArcId best = cut.front();
  Key best_key = key(best);
  for (ArcId a : cut.subspan(1)) {
    Key k = key(a);
    if (k > best_key) {
      best_key = k;
      best = a;
    }
  }
  return best;
}

}  // namespace flowcut
