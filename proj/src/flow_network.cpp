#include "flowcut/flow_network.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flowcut {

FlowNetwork FlowNetwork::from_undirected(const UndirectedGraph& g) {
  FlowNetwork net;
  const NodeId n = g.node_count();
  const ArcId m = g.arc_count();
  net.first_out_.resize(static_cast<std::size_t>(n) + 1);
  for (NodeId v = 0; v < n; ++v) net.first_out_[v] = g.first_arc(v);
  net.first_out_[n] = m;
  net.head_.resize(m);
  net.twin_.resize(m);
  net.capacity_.assign(m, 1);
  net.input_arc_.resize(m);
  for (NodeId u = 0; u < n; ++u) {
    for (ArcId a = g.first_arc(u); a < g.first_arc(u) + g.degree(u); ++a) {
      const NodeId v = g.head(a);
      net.head_[a] = v;
      net.input_arc_[a] = a;
      auto nb = g.neighbors(v);
      net.twin_[a] = g.first_arc(v) + static_cast<ArcId>(std::lower_bound(nb.begin(), nb.end(), u) - nb.begin());
    }
  }
  net.real_arc_count_ = m;
  return net;
}

FlowNetwork FlowNetwork::from_arcs(NodeId node_count, std::span<const Edge> arcs) {
  FlowNetwork net;
  const auto input_count = static_cast<ArcId>(arcs.size());
  const ArcId m = 2 * input_count;
  std::vector<ArcId> degree(static_cast<std::size_t>(node_count) + 1, 0);
  for (auto [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) throw std::out_of_range("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop in flow network");
    ++degree[u + 1];
    ++degree[v + 1];
  }
  std::partial_sum(degree.begin(), degree.end(), degree.begin());
  net.first_out_ = degree;
  net.head_.resize(m);
  net.twin_.resize(m);
  net.capacity_.resize(m);
  net.input_arc_.resize(m);
  std::vector<ArcId> next(degree.begin(), degree.end() - 1);
  for (ArcId i = 0; i < input_count; ++i) {
    auto [u, v] = arcs[i];
    const ArcId fwd = next[u]++;
    const ArcId bwd = next[v]++;
    net.head_[fwd] = v;
    net.head_[bwd] = u;
    net.capacity_[fwd] = 1;
    net.capacity_[bwd] = 0;
    net.input_arc_[fwd] = i;
    net.input_arc_[bwd] = kInvalidArc;
    net.twin_[fwd] = bwd;
    net.twin_[bwd] = fwd;
  }
  net.real_arc_count_ = input_count;
  return net;
}

}  // namespace flowcut
