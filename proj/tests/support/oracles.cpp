#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace flowcut::testing {

std::int64_t edmonds_karp(const UndirectedGraph& g, std::span<const NodeId> sources,
                          std::span<const NodeId> targets) {
  const int n = g.node_count() + 2;
  const int src = n - 2, snk = n - 1;
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) cap[u][v] = cap[v][u] = 1;
  for (NodeId s : sources) cap[src][s] = INT_MAX / 2;
  for (NodeId t : targets) cap[t][snk] = INT_MAX / 2;
  std::int64_t flow = 0;
  while (true) {
    std::vector<int> prev(n, -1);
    prev[src] = src;
    std::deque<int> q{src};
    while (!q.empty() && prev[snk] < 0) {
      const int x = q.front();
      q.pop_front();
      for (int y = 0; y < n; ++y)
        if (prev[y] < 0 && cap[x][y] > 0) {
          prev[y] = x;
          q.push_back(y);
        }
    }
    if (prev[snk] < 0) return flow;
    int bottleneck = INT_MAX;
    for (int y = snk; y != src; y = prev[y]) bottleneck = std::min(bottleneck, cap[prev[y]][y]);
    for (int y = snk; y != src; y = prev[y]) {
      cap[prev[y]][y] -= bottleneck;
      cap[y][prev[y]] += bottleneck;
    }
    flow += bottleneck;
  }
}

std::int64_t brute_force_min_cut(const UndirectedGraph& g, std::span<const NodeId> sources,
                                 std::span<const NodeId> targets) {
  const NodeId n = g.node_count();
  std::vector<int> fixed(static_cast<std::size_t>(n), -1);
  for (NodeId s : sources) fixed[s] = 1;
  for (NodeId t : targets) fixed[t] = 0;
  std::vector<NodeId> free;
  for (NodeId v = 0; v < n; ++v)
    if (fixed[v] < 0) free.push_back(v);
  if (free.size() > 20) throw std::invalid_argument("brute_force_min_cut: too many free nodes");
  const auto edges = g.edges();
  std::int64_t best = INT64_MAX;
  std::vector<int> side(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    for (NodeId v = 0; v < n; ++v) side[v] = fixed[v];
    for (std::size_t i = 0; i < free.size(); ++i) side[free[i]] = (mask >> i) & 1;
    std::int64_t c = 0;
    for (auto [u, v] : edges) c += side[u] != side[v];
    best = std::min(best, c);
  }
  return best;
}

namespace {

bool connected_avoiding(const UndirectedGraph& g, NodeId s, NodeId t, std::uint32_t removed) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.node_count()), 0);
  std::vector<NodeId> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (v == t) return true;
    for (NodeId w : g.neighbors(v))
      if (!seen[w] && !((removed >> w) & 1)) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

// Component sizes of g minus the nodes in `removed`.
std::vector<int> component_sizes(const UndirectedGraph& g, std::uint32_t removed) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.node_count()), 0);
  std::vector<int> sizes;
  for (NodeId r = 0; r < g.node_count(); ++r) {
    if (seen[r] || ((removed >> r) & 1)) continue;
    int count = 0;
    std::vector<NodeId> stack{r};
    seen[r] = 1;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      ++count;
      for (NodeId w : g.neighbors(v))
        if (!seen[w] && !((removed >> w) & 1)) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    sizes.push_back(count);
  }
  return sizes;
}

}  // namespace

int brute_force_min_vertex_cut(const UndirectedGraph& g, NodeId s, NodeId t) {
  const NodeId n = g.node_count();
  if (n > 24) throw std::invalid_argument("brute_force_min_vertex_cut: graph too large");
  if (g.has_edge(s, t)) throw std::invalid_argument("brute_force_min_vertex_cut: terminals adjacent");
  int best = INT_MAX;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (((mask >> s) & 1) || ((mask >> t) & 1)) continue;
    const int k = std::popcount(mask);
    if (k < best && !connected_avoiding(g, s, t, mask)) best = k;
  }
  return best;
}

int brute_force_balanced_separator(const UndirectedGraph& g, int max_size) {
  const NodeId n = g.node_count();
  if (n > 24) throw std::invalid_argument("brute_force_balanced_separator: graph too large");
  int best = INT_MAX;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k > max_size || k >= best) continue;
    const std::vector<int> sizes = component_sizes(g, mask);
    if (sizes.size() < 2) continue;
    const int total = n - k;
    // Subset sums of component sizes.
    std::vector<std::uint8_t> reach(static_cast<std::size_t>(total) + 1, 0);
    reach[0] = 1;
    for (int s : sizes)
      for (int x = total; x >= s; --x) reach[x] |= reach[x - s];
    for (int small = 1; small <= total / 2; ++small)
      if (reach[small] && total - small <= (total + 1) / 2) best = k;
  }
  return best;
}

NaiveElimination naive_elimination(const UndirectedGraph& g, std::span<const NodeId> order) {
  const NodeId n = g.node_count();
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<NodeId> rank(static_cast<std::size_t>(n));
  for (NodeId i = 0; i < n; ++i) rank[order[i]] = i;
  std::vector<std::uint8_t> gone(static_cast<std::size_t>(n), 0);
  NaiveElimination r;
  // up[x][y]: supergraph arc from lower-ranked x to higher-ranked y.
  std::vector<std::vector<std::uint8_t>> up(n, std::vector<std::uint8_t>(n, 0));
  for (NodeId v : order) {
    std::vector<NodeId> nb;
    for (NodeId w = 0; w < n; ++w)
      if (!gone[w] && w != v && adj[v][w]) nb.push_back(w);
    for (NodeId w : nb) up[v][w] = 1;
    r.supergraph_arcs += static_cast<std::int64_t>(nb.size());
    r.treewidth_bound = std::max(r.treewidth_bound, static_cast<int>(nb.size()));
    for (NodeId a : nb)
      for (NodeId b : nb)
        if (a != b) adj[a][b] = 1;
    gone[v] = 1;
  }
  r.fill_in = r.supergraph_arcs - g.edge_count();
  auto linked = [&](NodeId a, NodeId b) { return up[a][b] || up[b][a]; };
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (linked(a, b))
        for (NodeId c = b + 1; c < n; ++c) r.triangles += linked(a, c) && linked(b, c);
  r.search_space_nodes.resize(static_cast<std::size_t>(n));
  r.search_space_arcs.resize(static_cast<std::size_t>(n));
  for (NodeId z = 0; z < n; ++z) {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
    std::vector<NodeId> stack{z};
    seen[z] = 1;
    std::int64_t nodes = 0, arcs = 0;
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      ++nodes;
      for (NodeId y = 0; y < n; ++y)
        if (up[x][y]) {
          ++arcs;
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
    }
    r.search_space_nodes[z] = nodes;
    r.search_space_arcs[z] = arcs;
  }
  // Elimination tree: parent is the lowest-ranked upward neighbor.
  std::vector<int> depth(static_cast<std::size_t>(n), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    NodeId parent = -1;
    for (NodeId y = 0; y < n; ++y)
      if (up[v][y] && (parent < 0 || rank[y] < rank[parent])) parent = y;
    if (parent >= 0) depth[v] = depth[parent] + 1;
    r.height = std::max(r.height, depth[v]);
  }
  return r;
}

namespace {

int ranking_of(const UndirectedGraph& g, std::uint32_t set, std::unordered_map<std::uint32_t, int>& memo);

std::vector<std::uint32_t> components_of(const UndirectedGraph& g, std::uint32_t set) {
  std::vector<std::uint32_t> out;
  std::uint32_t left = set;
  while (left) {
    const int r = std::countr_zero(left);
    std::uint32_t comp = 1u << r;
    std::vector<NodeId> stack{r};
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(v))
        if (((set >> w) & 1) && !((comp >> w) & 1)) {
          comp |= 1u << w;
          stack.push_back(w);
        }
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

int ranking_of(const UndirectedGraph& g, std::uint32_t set, std::unordered_map<std::uint32_t, int>& memo) {
  if (!set) return 0;
  if (auto it = memo.find(set); it != memo.end()) return it->second;
  const auto comps = components_of(g, set);
  int best;
  if (comps.size() > 1) {
    best = 0;
    for (auto c : comps) best = std::max(best, ranking_of(g, c, memo));
  } else {
    best = INT_MAX;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      best = std::min(best, 1 + ranking_of(g, set & ~(1u << v), memo));
    }
  }
  memo[set] = best;
  return best;
}

}  // namespace

int brute_force_ranking_number(const UndirectedGraph& forest) {
  if (forest.node_count() > 20) throw std::invalid_argument("brute_force_ranking_number: too many nodes");
  std::unordered_map<std::uint32_t, int> memo;
  return ranking_of(forest, (1u << forest.node_count()) - 1, memo);
}

bool is_permutation_of(std::span<const NodeId> order, NodeId n) {
  if (order.size() != static_cast<std::size_t>(n)) return false;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  for (NodeId v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool separates(const UndirectedGraph& g, std::span<const std::uint8_t> labels) {
  for (auto [u, v] : g.edges())
    if (labels[u] != 2 && labels[v] != 2 && labels[u] != labels[v]) return false;
  return true;
}

}  // namespace flowcut::testing
