#include "flowcut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flowcut {

UndirectedGraph UndirectedGraph::from_edges(NodeId node_count, std::span<const Edge> edges) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count)
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  UndirectedGraph g;
  g.first_out_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  g.heads_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    ++g.first_out_[u + 1];
    g.heads_.push_back(v);
  }
  std::partial_sum(g.first_out_.begin(), g.first_out_.end(), g.first_out_.begin());
  return g;
}

bool UndirectedGraph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<std::string> check_invariants(NodeId node_count, std::span<const ArcId> first_out,
                                            std::span<const NodeId> heads) {
  if (first_out.size() != static_cast<std::size_t>(node_count) + 1) return "first_out has wrong length";
  if (first_out.front() != 0 || first_out.back() != static_cast<ArcId>(heads.size()))
    return "first_out does not span the arc array";
  for (NodeId u = 0; u < node_count; ++u) {
    if (first_out[u] > first_out[u + 1]) return "first_out is not monotone";
    for (ArcId a = first_out[u]; a < first_out[u + 1]; ++a) {
      NodeId v = heads[a];
      if (v < 0 || v >= node_count) return "arc head out of range at node " + std::to_string(u);
      if (v == u) return "self-loop at node " + std::to_string(u);
      if (a > first_out[u] && heads[a - 1] >= v)
        return "adjacency of node " + std::to_string(u) + " not strictly ascending";
      auto first = heads.begin() + first_out[v], last = heads.begin() + first_out[v + 1];
      if (!std::binary_search(first, last, u))
        return "missing reverse arc (" + std::to_string(v) + "," + std::to_string(u) + ")";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_invariants(const UndirectedGraph& g) {
  std::vector<ArcId> first_out(static_cast<std::size_t>(g.node_count()) + 1);
  std::vector<NodeId> heads(static_cast<std::size_t>(g.arc_count()));
  for (NodeId v = 0; v <= g.node_count(); ++v)
    first_out[v] = v < g.node_count() ? g.first_arc(v) : g.arc_count();
  for (ArcId a = 0; a < g.arc_count(); ++a) heads[a] = g.head(a);
  return check_invariants(g.node_count(), first_out, heads);
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> local(static_cast<std::size_t>(g.node_count()), kInvalidNode);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (NodeId w : g.neighbors(nodes[i]))
      if (local[w] != kInvalidNode && static_cast<NodeId>(i) < local[w])
        edges.emplace_back(static_cast<NodeId>(i), local[w]);
  return UndirectedGraph::from_edges(static_cast<NodeId>(nodes.size()), edges);
}

std::vector<std::vector<NodeId>> connected_components(const UndirectedGraph& g) {
  std::vector<std::vector<NodeId>> comps;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.node_count()), 0);
  std::vector<NodeId> stack;
  for (NodeId r = 0; r < g.node_count(); ++r) {
    if (seen[r]) continue;
    auto& comp = comps.emplace_back();
    seen[r] = 1;
    stack.push_back(r);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (NodeId w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

bool is_connected(const UndirectedGraph& g) { return connected_components(g).size() <= 1; }

bool induces_connected_subgraph(const UndirectedGraph& g, std::span<const std::uint8_t> member) {
  NodeId start = kInvalidNode, total = 0;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (member[v]) {
      ++total;
      if (start == kInvalidNode) start = v;
    }
  if (total == 0) return true;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.node_count()), 0);
  std::vector<NodeId> stack{start};
  seen[start] = 1;
  NodeId reached = 0;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    ++reached;
    for (NodeId w : g.neighbors(v))
      if (member[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return reached == total;
}

}  // namespace flowcut
