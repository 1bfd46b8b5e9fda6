#include "flowcut/ordering.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <variant>

namespace flowcut {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::tree_base: return "tree-base";
    case Provenance::clique_base: return "clique-base";
    case Provenance::degree2_chain: return "degree2-chain";
    case Provenance::separator: return "separator";
    case Provenance::leaf_component: return "leaf-component";
  }
  return "?";
}

bool is_clique(const UndirectedGraph& g) {
  const std::int64_t n = g.node_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_forest(const UndirectedGraph& g) {
  return g.edge_count() == g.node_count() - static_cast<std::int64_t>(connected_components(g).size());
}

std::vector<int> tree_ranking(const UndirectedGraph& forest) {
  if (!is_forest(forest)) throw std::invalid_argument("tree_order requires a forest");
  const NodeId n = forest.node_count();
  std::vector<NodeId> parent(static_cast<std::size_t>(n), kInvalidNode);
  std::vector<NodeId> bfs;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  bfs.reserve(static_cast<std::size_t>(n));
  for (NodeId r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    bfs.push_back(r);
    for (std::size_t i = bfs.size() - 1; i < bfs.size(); ++i)
      for (NodeId w : forest.neighbors(bfs[i]))
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = bfs[i];
          bfs.push_back(w);
        }
  }
  // Bottom-up: `visible` holds the ranks still visible from above a
  // subtree, `dup` the ranks visible from two or more children.
  std::vector<std::uint64_t> visible(static_cast<std::size_t>(n), 0), below(static_cast<std::size_t>(n), 0),
      dup(static_cast<std::size_t>(n), 0);
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    const NodeId v = *it;
    const std::uint64_t u = below[v];
    const int floor = dup[v] ? 64 - std::countl_zero(dup[v]) : 0;
    const std::uint64_t free = ~u & (~std::uint64_t{0} << floor);
    const int r = std::countr_zero(free);
    rank[v] = r + 1;
    visible[v] = ((u >> r) << r) | (std::uint64_t{1} << r);
    if (const NodeId p = parent[v]; p != kInvalidNode) {
      dup[p] |= below[p] & visible[v];
      below[p] |= visible[v];
    }
  }
  return rank;
}

std::vector<NodeId> tree_order(const UndirectedGraph& forest) {
  const std::vector<int> rank = tree_ranking(forest);
  std::vector<NodeId> order(rank.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return rank[a] < rank[b]; });
  return order;
}

std::vector<NodeId> perfect_elimination_tree_order(const UndirectedGraph& forest) {
  if (!is_forest(forest)) throw std::invalid_argument("perfect_elimination_tree_order requires a forest");
  const NodeId n = forest.node_count();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<NodeId> order, layer, next;
  order.reserve(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = forest.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  while (!layer.empty()) {
    next.clear();
    for (NodeId v : layer) {
      order.push_back(v);
      degree[v] = -1;
    }
    for (NodeId v : layer)
      for (NodeId w : forest.neighbors(v))
        if (degree[w] > 0 && --degree[w] == 1) next.push_back(w);
    // A two-node remainder has both ends at degree 1; a lone center drops to 0.
    for (NodeId v : layer)
      for (NodeId w : forest.neighbors(v))
        if (degree[w] == 0) {
          next.push_back(w);
          degree[w] = -2;
        }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer.swap(next);
  }
  return order;
}

BiconnectedComponent largest_biconnected_component(const UndirectedGraph& g) {
  const NodeId n = g.node_count();
  std::vector<std::int32_t> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> parent(static_cast<std::size_t>(n), kInvalidNode);
  std::vector<std::uint32_t> mark(static_cast<std::size_t>(n), 0);
  std::uint32_t block_id = 0;
  std::vector<Edge> edge_stack;
  struct Frame {
    NodeId v;
    ArcId next;
  };
  std::vector<Frame> frames;

  BiconnectedComponent best;
  std::vector<NodeId> nodes;
  auto close_block = [&](NodeId p, NodeId v) {
    ++block_id;
    nodes.clear();
    std::int64_t edges = 0;
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      ++edges;
      for (NodeId x : {e.first, e.second})
        if (mark[x] != block_id) {
          mark[x] = block_id;
          nodes.push_back(x);
        }
      if (e == Edge{p, v}) break;
    }
    std::sort(nodes.begin(), nodes.end());
    const auto key = [](std::int64_t m, std::size_t k, NodeId first) { return std::tuple(m, k, -first); };
    if (best.nodes.empty() ||
        key(edges, nodes.size(), nodes.front()) > key(best.edge_count, best.nodes.size(), best.nodes.front())) {
      best.nodes = nodes;
      best.edge_count = edges;
    }
  };

  std::int32_t time = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = time++;
    frames.push_back({root, g.first_arc(root)});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const NodeId v = f.v;
      if (f.next < g.first_arc(v + 1)) {
        const NodeId w = g.head(f.next++);
        if (disc[w] == -1) {
          edge_stack.emplace_back(v, w);
          parent[w] = v;
          disc[w] = low[w] = time++;
          frames.push_back({w, g.first_arc(w)});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      frames.pop_back();
      if (const NodeId p = parent[v]; p != kInvalidNode) {
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) close_block(p, v);
      }
    }
  }

  std::vector<std::uint8_t> inside(static_cast<std::size_t>(n), 0);
  for (NodeId v : best.nodes) inside[v] = 1;
  for (NodeId v : best.nodes)
    for (NodeId w : g.neighbors(v))
      if (!inside[w]) best.leaving_edges.emplace_back(v, w);
  return best;
}

ChainReduction eliminate_degree2_chains(const UndirectedGraph& g) {
  const NodeId n = g.node_count();
  std::vector<std::uint8_t> removed(static_cast<std::size_t>(n), 0), visited(static_cast<std::size_t>(n), 0);
  std::vector<Edge> shortcuts;
  auto deg2 = [&](NodeId v) { return g.degree(v) == 2; };

  // Follows degree-2 nodes from `from` through `next`; returns the first
  // node of another degree (or `start` if the walk closes a cycle).
  auto walk = [&](NodeId start, NodeId from, NodeId next, std::vector<NodeId>& chain) {
    while (next != start && deg2(next)) {
      chain.push_back(next);
      visited[next] = 1;
      const auto nb = g.neighbors(next);
      const NodeId after = nb[0] == from ? nb[1] : nb[0];
      from = next;
      next = after;
    }
    return next;
  };

  std::vector<NodeId> left, right, chain;
  for (NodeId y = 0; y < n; ++y) {
    if (!deg2(y) || visited[y]) continue;
    visited[y] = 1;
    left.clear();
    right.clear();
    const auto nb = g.neighbors(y);
    const NodeId x = walk(y, y, nb[0], left);
    if (x == y) {
      // Cycle of degree-2 nodes only: keep the smallest node and its two
      // neighbors as a triangle.
      chain.assign(1, y);
      chain.insert(chain.end(), left.begin(), left.end());
      const auto anchor = std::min_element(chain.begin(), chain.end()) - chain.begin();
      std::rotate(chain.begin(), chain.begin() + anchor, chain.end());
      if (chain.size() > 3) {
        for (std::size_t i = 2; i + 1 < chain.size(); ++i) removed[chain[i]] = 1;
        shortcuts.emplace_back(chain[1], chain.back());
      }
      continue;
    }
    const NodeId z = walk(y, y, nb[1], right);
    // chain = y_1 .. y_k from x to z
    chain.assign(left.rbegin(), left.rend());
    chain.push_back(y);
    chain.insert(chain.end(), right.begin(), right.end());
    if (g.degree(x) == 1 || g.degree(z) == 1) {
      for (NodeId v : chain) removed[v] = 1;
      if (g.degree(x) == 1) removed[x] = 1;
      if (g.degree(z) == 1) removed[z] = 1;
    } else if (x != z) {
      for (NodeId v : chain) removed[v] = 1;
      shortcuts.emplace_back(x, z);
    } else if (chain.size() >= 3) {
      for (std::size_t i = 1; i + 1 < chain.size(); ++i) removed[chain[i]] = 1;
      shortcuts.emplace_back(chain.front(), chain.back());
    }
  }

  ChainReduction out;
  std::vector<NodeId> local(static_cast<std::size_t>(n), kInvalidNode);
  std::vector<NodeId> gone;
  for (NodeId v = 0; v < n; ++v) {
    if (removed[v]) {
      gone.push_back(v);
    } else {
      local[v] = static_cast<NodeId>(out.kept.size());
      out.kept.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (!removed[u] && !removed[v]) edges.emplace_back(local[u], local[v]);
  for (auto [u, v] : shortcuts) edges.emplace_back(local[u], local[v]);
  out.reduced = UndirectedGraph::from_edges(static_cast<NodeId>(out.kept.size()), edges);
  for (NodeId v : tree_order(induced_subgraph(g, gone))) out.prefix.push_back(gone[v]);
  return out;
}

const Separator& select_separator(const ParetoSet<Separator>& pareto, double max_imbalance) {
  if (pareto.empty()) throw std::invalid_argument("select_separator needs a nonempty Pareto set");
  const Separator* best = nullptr;
  auto key = [](const Separator& s) { return std::tuple(s.expansion, s.size(), s.achieved_epsilon); };
  for (const Separator& s : pareto)
    if (s.achieved_epsilon <= max_imbalance + 1e-12 && (!best || key(s) < key(*best))) best = &s;
  if (best) return *best;
  best = &pareto[0];
  for (const Separator& s : pareto)
    if (s.achieved_epsilon < best->achieved_epsilon) best = &s;
  return *best;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t child_seed(std::uint64_t parent, std::span<const NodeId> ids) {
  std::uint64_t h = splitmix64(parent);
  for (NodeId v : ids) h = splitmix64(h ^ static_cast<std::uint64_t>(v));
  return h;
}

// A subgraph whose node i is global node ids[i]; ids are ascending.
struct Piece {
  UndirectedGraph graph;
  std::vector<NodeId> ids;
  std::uint64_t seed = 0;
  bool chains_reduced = false;
};

struct Emit {
  std::vector<NodeId> nodes;
  Provenance provenance;
};

Piece sub_piece(const Piece& p, std::span<const NodeId> local_nodes) {
  Piece out;
  out.graph = induced_subgraph(p.graph, local_nodes);
  out.ids.reserve(local_nodes.size());
  for (NodeId v : local_nodes) out.ids.push_back(p.ids[v]);
  out.seed = child_seed(p.seed, out.ids);
  return out;
}

}  // namespace

ContractionOrder compute_order(const UndirectedGraph& g, const OrderOptions& options) {
  ContractionOrder result;
  result.order.reserve(static_cast<std::size_t>(g.node_count()));
  std::vector<std::variant<Piece, Emit>> stack;
  {
    Piece root;
    root.graph = g;
    root.ids.resize(static_cast<std::size_t>(g.node_count()));
    std::iota(root.ids.begin(), root.ids.end(), 0);
    root.seed = options.seed;
    stack.emplace_back(std::move(root));
  }
  auto emit = [&](std::span<const NodeId> nodes, Provenance p) {
    for (NodeId v : nodes) {
      result.order.push_back(v);
      result.provenance.push_back(p);
    }
  };

  while (!stack.empty()) {
    auto item = std::move(stack.back());
    stack.pop_back();
    if (auto* e = std::get_if<Emit>(&item)) {
      emit(e->nodes, e->provenance);
      continue;
    }
    Piece piece = std::get<Piece>(std::move(item));
    const UndirectedGraph& h = piece.graph;
    const NodeId n = h.node_count();
    if (n == 0) continue;

    auto components = connected_components(h);
    if (components.size() > 1) {
      for (auto it = components.rbegin(); it != components.rend(); ++it) stack.emplace_back(sub_piece(piece, *it));
      continue;
    }
    if (n == 1) {
      emit(piece.ids, Provenance::leaf_component);
      continue;
    }
    if (is_forest(h)) {
      const auto local = options.tree_base == TreeBase::min_height ? tree_order(h) : perfect_elimination_tree_order(h);
      for (NodeId v : local) emit(std::span(&piece.ids[v], 1), Provenance::tree_base);
      continue;
    }
    if (is_clique(h)) {
      emit(piece.ids, Provenance::clique_base);
      continue;
    }

    const BiconnectedComponent block = largest_biconnected_component(h);
    if (static_cast<NodeId>(block.nodes.size()) < n) {
      std::vector<std::uint8_t> inside(static_cast<std::size_t>(n), 0);
      for (NodeId v : block.nodes) inside[v] = 1;
      std::vector<NodeId> rest;
      for (NodeId v = 0; v < n; ++v)
        if (!inside[v]) rest.push_back(v);
      stack.emplace_back(sub_piece(piece, block.nodes));
      stack.emplace_back(sub_piece(piece, rest));
      continue;
    }

    if (!piece.chains_reduced) {
      ChainReduction red = eliminate_degree2_chains(h);
      if (!red.prefix.empty()) {
        Piece next;
        next.graph = std::move(red.reduced);
        for (NodeId v : red.kept) next.ids.push_back(piece.ids[v]);
        next.seed = child_seed(piece.seed, next.ids);
        next.chains_reduced = true;
        stack.emplace_back(std::move(next));
        Emit prefix{{}, Provenance::degree2_chain};
        for (NodeId v : red.prefix) prefix.nodes.push_back(piece.ids[v]);
        stack.emplace_back(std::move(prefix));
        continue;
      }
    }

    const ParetoSet<Separator> pareto =
        separator_pareto(h, MultiOptions{options.pairs, 0.0, piece.seed, options.threads});
    const Separator* sep = pareto.empty() ? nullptr : &select_separator(pareto, options.max_separator_imbalance);
    std::vector<NodeId> side[2], q;
    if (sep && sep->size() > 0 && sep->side1 > 0 && sep->side2 > 0) {
      for (NodeId v = 0; v < n; ++v) {
        const std::uint8_t l = sep->labels[v];
        (l == 2 ? q : side[l]).push_back(v);
      }
    } else {
      NodeId hub = 0;
      for (NodeId v = 1; v < n; ++v)
        if (h.degree(v) > h.degree(hub)) hub = v;
      q.push_back(hub);
      for (NodeId v = 0; v < n; ++v)
        if (v != hub) side[0].push_back(v);
    }
    Emit last{{}, Provenance::separator};
    for (NodeId v : q) last.nodes.push_back(piece.ids[v]);
    stack.emplace_back(std::move(last));
    if (!side[1].empty()) stack.emplace_back(sub_piece(piece, side[1]));
    stack.emplace_back(sub_piece(piece, side[0]));
  }
  return result;
}

}  // namespace flowcut
