#include "flowcut/separator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace flowcut {

ExpandedDigraph expand(const UndirectedGraph& g) {
  const NodeId n = g.node_count();
  std::vector<Edge> arcs;
  arcs.reserve(static_cast<std::size_t>(n) + static_cast<std::size_t>(g.arc_count()));
  for (NodeId x = 0; x < n; ++x) arcs.emplace_back(ExpandedDigraph::in_node(x), ExpandedDigraph::out_node(x));
  for (NodeId x = 0; x < n; ++x)
    for (NodeId y : g.neighbors(x)) arcs.emplace_back(ExpandedDigraph::out_node(x), ExpandedDigraph::in_node(y));
  ExpandedDigraph out;
  out.network = FlowNetwork::from_arcs(2 * n, arcs);
  out.original_node_count = n;
  return out;
}

double separator_epsilon(std::int64_t side1, std::int64_t side2) {
  if (side1 + side2 == 0) return 0.0;
  return achieved_epsilon(std::min(side1, side2), std::max(side1, side2));
}

namespace {

// Endpoint of a crossing arc (x on side lx, y on side ly) that joins Q.
NodeId choose_endpoint(NodeId x, int lx, NodeId y, int ly, const std::int64_t (&tentative)[2], NodeId s, NodeId t) {
  NodeId pick = tentative[lx] > tentative[ly] ? x : y;
  const NodeId other = pick == x ? y : x;
  auto terminal = [&](NodeId v) { return v == s || v == t; };
  if (terminal(pick) && !terminal(other)) pick = other;
  return pick;
}

bool sides_disconnected(const UndirectedGraph& g, const std::vector<std::uint8_t>& labels) {
  std::vector<std::uint8_t> seen(labels.size(), 0);
  std::vector<NodeId> stack;
  bool started[2] = {false, false};
  for (NodeId r = 0; r < g.node_count(); ++r) {
    const std::uint8_t l = labels[r];
    if (l == 2 || seen[r]) continue;
    if (started[l]) return true;
    started[l] = true;
    seen[r] = 1;
    stack.assign(1, r);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(v))
        if (!seen[w] && labels[w] == l) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return false;
}

}  // namespace

Separator derive_separator(const UndirectedGraph& g, std::span<const std::uint8_t> source_side, Side emitted,
                           NodeId s, NodeId t) {
  const NodeId n = g.node_count();
  if (source_side.size() != 2 * static_cast<std::size_t>(n)) throw std::invalid_argument("side flags must cover 2n nodes");
  if (s < 0 || s >= n || t < 0 || t >= n || s == t) throw std::invalid_argument("invalid terminals");
  if (!source_side[ExpandedDigraph::out_node(s)] || source_side[ExpandedDigraph::in_node(t)])
    throw std::invalid_argument("side flags do not separate s_out from t_in");

  Separator sep;
  sep.labels.resize(static_cast<std::size_t>(n));
  std::int64_t tentative[2] = {0, 0};
  for (NodeId x = 0; x < n; ++x) {
    const bool in = source_side[ExpandedDigraph::in_node(x)] != 0;
    const bool out = source_side[ExpandedDigraph::out_node(x)] != 0;
    std::uint8_t l;
    if (in && !out) l = 2;
    else if (in == out) l = in ? 0 : 1;
    else l = emitted == Side::source ? 0 : 1;
    sep.labels[x] = l;
    if (l < 2) ++tentative[l];
  }
  std::vector<NodeId> chosen;
  for (NodeId x = 0; x < n; ++x) {
    if (!source_side[ExpandedDigraph::out_node(x)]) continue;
    for (NodeId y : g.neighbors(x)) {
      if (source_side[ExpandedDigraph::in_node(y)]) continue;
      const int lx = sep.labels[x], ly = sep.labels[y];
      if (lx == 2 || ly == 2 || lx == ly) continue;
      chosen.push_back(choose_endpoint(x, lx, y, ly, tentative, s, t));
    }
  }
  for (NodeId v : chosen) sep.labels[v] = 2;
  for (NodeId x = 0; x < n; ++x) {
    if (sep.labels[x] == 2) sep.separator_nodes.push_back(x);
    else if (sep.labels[x] == 0) ++sep.side1;
    else ++sep.side2;
  }
  sep.small_side = std::min(sep.side1, sep.side2);
  sep.large_side = std::max(sep.side1, sep.side2);
  sep.achieved_epsilon = separator_epsilon(sep.side1, sep.side2);
  sep.expansion = sep.small_side > 0 ? static_cast<double>(sep.size()) / static_cast<double>(sep.small_side)
                                     : std::numeric_limits<double>::infinity();
  sep.sides_disconnected = sides_disconnected(g, sep.labels);
  return sep;
}

NodeSeparatorModel::NodeSeparatorModel(NodeId original_node_count, NodeId s, NodeId t)
    : n_(original_node_count), s_(s), t_(t), chosen_(static_cast<std::size_t>(original_node_count), 0) {}

int NodeSeparatorModel::core_weight(Side side, NodeId v) const {
  return ExpandedDigraph::is_out_node(v) == (side == Side::source) ? 1 : 0;
}

PartitionCounts NodeSeparatorModel::count(const FlowState& state, Side side, std::span<const ArcId> cut,
                                          std::int64_t weighted_core) {
  if (++epoch_ == 0) {
    std::fill(chosen_.begin(), chosen_.end(), 0);
    epoch_ = 1;
  }
  const FlowNetwork& net = state.network();
  auto internal = [&](ArcId a) { return net.input_arc(a) < n_; };
  const auto q_internal = static_cast<std::int64_t>(std::count_if(cut.begin(), cut.end(), internal));
  std::int64_t tentative[2];
  const int own = side == Side::source ? 0 : 1;
  tentative[own] = weighted_core;
  tentative[1 - own] = n_ - weighted_core - q_internal;

  std::int64_t taken[2] = {0, 0};
  for (ArcId a : cut) {
    if (internal(a)) continue;
    const NodeId x = ExpandedDigraph::original(net.tail(a));
    const NodeId y = ExpandedDigraph::original(net.head(a));
    int lx, ly;
    if (side == Side::source) {
      lx = 0;
      ly = state.in_core(Side::source, ExpandedDigraph::out_node(y)) ? 0 : 1;
    } else {
      ly = 1;
      lx = state.in_core(Side::target, ExpandedDigraph::in_node(x)) ? 1 : 0;
    }
    if (lx == ly) continue;
    const NodeId p = choose_endpoint(x, lx, y, ly, tentative, s_, t_);
    if (chosen_[p] == epoch_) continue;
    chosen_[p] = epoch_;
    ++taken[p == x ? lx : ly];
  }
  return {q_internal + taken[0] + taken[1], tentative[0] - taken[0], tentative[1] - taken[1]};
}

namespace {

BisectionInstance separator_instance(const ExpandedDigraph& x, NodeId s, NodeId t, double epsilon, std::int32_t id) {
  const NodeId n = x.original_node_count;
  if (s < 0 || s >= n || t < 0 || t >= n || s == t) throw std::invalid_argument("invalid terminals");
  return BisectionInstance(x.network, {ExpandedDigraph::out_node(s)}, {ExpandedDigraph::in_node(t)}, epsilon,
                           std::make_unique<NodeSeparatorModel>(n, s, t), id);
}

}  // namespace

std::vector<Separator> enumerate_separators(const UndirectedGraph& g, NodeId s, NodeId t, double epsilon) {
  const ExpandedDigraph x = expand(g);
  BisectionInstance inst = separator_instance(x, s, t, epsilon, 0);
  std::vector<Separator> out;
  while (!inst.finished())
    if (auto e = inst.step()) out.push_back(derive_separator(g, inst.source_side_of(*e), e->side, s, t));
  return out;
}

ParetoSet<Separator> separator_pareto(const UndirectedGraph& g, const MultiOptions& options) {
  const auto pairs = sample_terminal_pairs(g.node_count(), options.pairs, options.seed);
  const ExpandedDigraph x = expand(g);
  std::vector<BisectionInstance> instances;
  instances.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    instances.push_back(
        separator_instance(x, pairs[i].first, pairs[i].second, options.epsilon, static_cast<std::int32_t>(i)));
  std::vector<Separator> seps;
  for (const CutEmission& e : run_instances(instances, options.threads)) {
    const auto& [s, t] = pairs[static_cast<std::size_t>(e.instance)];
    seps.push_back(derive_separator(g, instances[static_cast<std::size_t>(e.instance)].source_side_of(e), e.side, s, t));
  }
  return pareto_filter(std::move(seps));
}

}  // namespace flowcut
