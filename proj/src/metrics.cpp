#include "flowcut/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

namespace flowcut {

EliminationResult elimination_game(const UndirectedGraph& g, std::span<const NodeId> order) {
  const NodeId n = g.node_count();
  if (order.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("order length differs from node count");
  EliminationResult r;
  r.rank.assign(static_cast<std::size_t>(n), kInvalidNode);
  for (NodeId i = 0; i < n; ++i) {
    const NodeId v = order[i];
    if (v < 0 || v >= n || r.rank[v] != kInvalidNode) throw std::invalid_argument("order is not a permutation");
    r.rank[v] = i;
  }
  r.upward.resize(static_cast<std::size_t>(n));
  r.etree_parent.assign(static_cast<std::size_t>(n), kInvalidNode);
  for (NodeId v = 0; v < n; ++v)
    for (NodeId w : g.neighbors(v))
      if (r.rank[w] > r.rank[v]) r.upward[v].push_back(w);

  auto by_rank = [&](NodeId a, NodeId b) { return r.rank[a] < r.rank[b]; };
  for (NodeId v : order) {
    auto& up = r.upward[v];
    std::sort(up.begin(), up.end(), by_rank);
    up.erase(std::unique(up.begin(), up.end()), up.end());
    r.supergraph_arcs += static_cast<std::int64_t>(up.size());
    r.treewidth_bound = std::max(r.treewidth_bound, static_cast<int>(up.size()));
    if (up.empty()) continue;
    const NodeId p = up.front();
    r.etree_parent[v] = p;
    auto& target = r.upward[p];
    target.insert(target.end(), up.begin() + 1, up.end());
  }
  r.original_edges = g.edge_count();
  r.fill_in = r.supergraph_arcs - r.original_edges;
  return r;
}

std::int64_t count_triangles(const EliminationResult& r) {
  std::int64_t total = 0;
  for (const auto& up : r.upward) {
    const auto k = static_cast<std::int64_t>(up.size());
    total += k * (k - 1) / 2;
  }
  return total;
}

namespace {

// Search-space node and arc counts for every node, parents first.
void search_spaces(const EliminationResult& r, std::vector<std::int64_t>& nodes, std::vector<std::int64_t>& arcs) {
  const auto n = r.rank.size();
  std::vector<NodeId> order(n);
  for (std::size_t v = 0; v < n; ++v) order[static_cast<std::size_t>(r.rank[v])] = static_cast<NodeId>(v);
  nodes.assign(n, 0);
  arcs.assign(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    const NodeId p = r.etree_parent[v];
    nodes[v] = 1 + (p == kInvalidNode ? 0 : nodes[p]);
    arcs[v] = static_cast<std::int64_t>(r.upward[v].size()) + (p == kInvalidNode ? 0 : arcs[p]);
  }
}

}  // namespace

int elimination_tree_height(const EliminationResult& r) {
  std::vector<std::int64_t> nodes, arcs;
  search_spaces(r, nodes, arcs);
  return nodes.empty() ? 0 : static_cast<int>(*std::max_element(nodes.begin(), nodes.end()));
}

SearchSpaceStats search_space_stats(const EliminationResult& r, std::optional<SearchSpaceSample> sample) {
  const auto n = static_cast<NodeId>(r.rank.size());
  std::vector<NodeId> starts(static_cast<std::size_t>(n));
  std::iota(starts.begin(), starts.end(), 0);
  if (sample) {
    if (sample->count < 0 || sample->count > n) throw std::invalid_argument("sample larger than the graph");
    std::vector<NodeId> chosen;
    std::mt19937_64 rng(sample->seed);
    std::sample(starts.begin(), starts.end(), std::back_inserter(chosen), sample->count, rng);
    starts = std::move(chosen);
  }
  std::vector<std::int64_t> nodes, arcs;
  search_spaces(r, nodes, arcs);
  SearchSpaceStats s;
  s.evaluated = static_cast<NodeId>(starts.size());
  if (starts.empty()) return s;
  std::int64_t sum_nodes = 0, sum_arcs = 0;
  for (NodeId v : starts) {
    sum_nodes += nodes[v];
    sum_arcs += arcs[v];
    s.max_nodes = std::max(s.max_nodes, nodes[v]);
    s.max_arcs = std::max(s.max_arcs, arcs[v]);
  }
  s.avg_nodes = static_cast<double>(sum_nodes) / static_cast<double>(starts.size());
  s.avg_arcs = static_cast<double>(sum_arcs) / static_cast<double>(starts.size());
  return s;
}

MetricsReport evaluate_order(const UndirectedGraph& g, std::span<const NodeId> order,
                             std::optional<SearchSpaceSample> sample) {
  const EliminationResult r = elimination_game(g, order);
  MetricsReport m;
  m.nodes = g.node_count();
  m.edges = g.edge_count();
  m.supergraph_arcs = r.supergraph_arcs;
  m.fill_in = r.fill_in;
  m.triangles = count_triangles(r);
  m.treewidth_bound = r.treewidth_bound;
  m.elimination_tree_height = elimination_tree_height(r);
  m.sampled = sample.has_value();
  m.search_space = search_space_stats(r, sample);
  return m;
}

void write_report(std::ostream& out, const MetricsReport& m) {
  char buf[64];
  auto fixed = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
  };
  out << "nodes=" << m.nodes << '\n'
      << "edges=" << m.edges << '\n'
      << "supergraph_arcs=" << m.supergraph_arcs << '\n'
      << "fill_in_arcs=" << m.fill_in << '\n'
      << "triangles=" << m.triangles << '\n'
      << "treewidth_bound=" << m.treewidth_bound << '\n'
      << "elimination_tree_height=" << m.elimination_tree_height << '\n'
      << "search_space_mode=" << (m.sampled ? "sampled" : "exact") << '\n'
      << "search_space_evaluated=" << m.search_space.evaluated << '\n'
      << "search_space_nodes_avg=" << fixed(m.search_space.avg_nodes) << '\n'
      << "search_space_nodes_max=" << m.search_space.max_nodes << '\n'
      << "search_space_arcs_avg=" << fixed(m.search_space.avg_arcs) << '\n'
      << "search_space_arcs_max=" << m.search_space.max_arcs << '\n';
}

}  // namespace flowcut
