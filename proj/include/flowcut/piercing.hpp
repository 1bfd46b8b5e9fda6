#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "flowcut/cut.hpp"
#include "flowcut/flow_network.hpp"

namespace flowcut {

/// Hop distances from the original source set and to the original target
/// set, measured over arcs of positive capacity.
struct DistanceTables {
  static constexpr std::int32_t unreachable = std::numeric_limits<std::int32_t>::max();

  std::vector<std::int32_t> dist_from_s;
  std::vector<std::int32_t> dist_to_t;
};

DistanceTables precompute_distances(const FlowNetwork& net, std::span<const NodeId> sources,
                                    std::span<const NodeId> targets);

/// The node a cut arc would add to `side` if pierced: the head for the
/// source side, the tail for the target side.
inline NodeId piercing_node(const FlowNetwork& net, ArcId a, Side side) {
  return side == Side::source ? net.head(a) : net.tail(a);
}

/// Picks the cut arc to pierce next.
///
/// Arcs whose piercing node lies outside `opposite_reachable` are preferred.
/// Among the preferred candidates the score dist(p,t) - dist(s,p) is
/// maximized (mirrored for the target side); any unreachable distance makes
/// the score minus infinity. Ties go to the smaller piercing node, then the
/// smaller arc id. Throws std::invalid_argument on an empty cut.
ArcId pick_piercing_arc(const FlowNetwork& net, std::span<const ArcId> cut, Side side,
                        std::span<const std::uint8_t> opposite_reachable, const DistanceTables& tables);

}  // namespace flowcut
