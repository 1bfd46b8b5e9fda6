#include "flowcut/bisection.hpp"

#include <algorithm>
#include <barrier>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace flowcut {

PartitionCounts EdgeCutModel::count(const FlowState&, Side side, std::span<const ArcId> cut,
                                    std::int64_t weighted_core) {
  const auto size = static_cast<std::int64_t>(cut.size());
  if (side == Side::source) return {size, weighted_core, n_ - weighted_core};
  return {size, n_ - weighted_core, weighted_core};
}

BisectionInstance::BisectionInstance(const FlowNetwork& net, std::vector<NodeId> sources,
                                     std::vector<NodeId> targets, double epsilon,
                                     std::unique_ptr<CutModel> model, std::int32_t id)
    : net_(&net),
      sources_(std::move(sources)),
      targets_(std::move(targets)),
      epsilon_(epsilon),
      model_(std::move(model)),
      id_(id),
      tables_(precompute_distances(net, sources_, targets_)),
      state_(net, sources_, targets_) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1]");
  for (int s = 0; s < 2; ++s) {
    const Side side = static_cast<Side>(s);
    joined_[s].assign(static_cast<std::size_t>(net.node_count()), kNever);
    for (NodeId v : state_.core_nodes(side)) {
      joined_[s][v] = 0;
      weighted_core_[s] += model_->core_weight(side, v);
    }
  }
}

std::optional<CutEmission> BisectionInstance::step() {
  if (finished_) return std::nullopt;
  if (state_.cores_meet()) {
    finished_ = true;
    return std::nullopt;
  }
  if (state_.has_augmenting_path()) {
    state_.augment();
    return std::nullopt;
  }

  const Side side =
      state_.reachable_size(Side::source) <= state_.reachable_size(Side::target) ? Side::source : Side::target;
  const int s = static_cast<int>(side);
  for (NodeId v : state_.assimilate(side)) {
    joined_[s][v] = emissions_;
    weighted_core_[s] += model_->core_weight(side, v);
  }
  if (state_.cores_meet()) {
    finished_ = true;
    return std::nullopt;
  }

  const std::span<const ArcId> cut = state_.extract_side_cut(side);
  const PartitionCounts counts = model_->count(state_, side, cut, weighted_core_[s]);
  CutEmission e;
  e.cut_size = counts.size;
  e.small_side = std::min(counts.source_side, counts.target_side);
  e.large_side = std::max(counts.source_side, counts.target_side);
  const std::int64_t total = e.small_side + e.large_side;
  e.achieved_epsilon = total > 0 ? achieved_epsilon(e.small_side, e.large_side) : 0.0;
  e.expansion = e.small_side > 0 ? static_cast<double>(e.cut_size) / static_cast<double>(e.small_side)
                                 : std::numeric_limits<double>::infinity();
  e.side = side;
  e.stamp = emissions_++;
  e.instance = id_;

  if (cut.empty() || meets_imbalance(e.large_side, total, epsilon_)) {
    finished_ = true;
    return e;
  }
  const ArcId a = pick_piercing_arc(*net_, cut, side, state_.reachable_flags(opposite(side)), tables_);
  const NodeId p = piercing_node(*net_, a, side);
  joined_[s][p] = emissions_;
  weighted_core_[s] += model_->core_weight(side, p);
  state_.pierce(side, p);
  return e;
}

std::vector<std::uint8_t> BisectionInstance::source_side_of(const CutEmission& e) const {
  const auto& joined = joined_[static_cast<int>(e.side)];
  const bool on_source = e.side == Side::source;
  std::vector<std::uint8_t> out(joined.size());
  for (std::size_t v = 0; v < joined.size(); ++v) out[v] = (joined[v] <= e.stamp) == on_source;
  return out;
}

Cut make_cut(const UndirectedGraph& g, std::span<const std::uint8_t> source_side) {
  Cut c;
  std::int64_t source_count = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (!source_side[u]) continue;
    ++source_count;
    for (NodeId v : g.neighbors(u))
      if (!source_side[v]) c.cut_arcs.emplace_back(u, v);
  }
  c.small_side = std::min(source_count, g.node_count() - source_count);
  c.large_side = g.node_count() - c.small_side;
  c.achieved_epsilon = g.node_count() > 0 ? achieved_epsilon(c.small_side, c.large_side) : 0.0;
  c.expansion = c.small_side > 0 ? static_cast<double>(c.size()) / static_cast<double>(c.small_side)
                                 : std::numeric_limits<double>::infinity();
  c.side_assignment.assign(source_side.begin(), source_side.end());
  return c;
}

namespace {

BisectionInstance edge_instance(const FlowNetwork& net, std::span<const NodeId> sources,
                                std::span<const NodeId> targets, double epsilon, std::int32_t id) {
  return BisectionInstance(net, {sources.begin(), sources.end()}, {targets.begin(), targets.end()}, epsilon,
                           std::make_unique<EdgeCutModel>(net.node_count()), id);
}

void require_nonempty(const UndirectedGraph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("graph is empty");
}

}  // namespace

std::vector<Cut> enumerate_cuts(const UndirectedGraph& g, std::span<const NodeId> sources,
                                std::span<const NodeId> targets, double epsilon) {
  require_nonempty(g);
  const FlowNetwork net = FlowNetwork::from_undirected(g);
  BisectionInstance inst = edge_instance(net, sources, targets, epsilon, 0);
  std::vector<Cut> out;
  while (!inst.finished())
    if (auto e = inst.step()) out.push_back(make_cut(g, inst.source_side_of(*e)));
  return out;
}

ParetoSet<Cut> pareto_cuts(const UndirectedGraph& g, std::span<const NodeId> sources,
                           std::span<const NodeId> targets, double epsilon) {
  require_nonempty(g);
  const FlowNetwork net = FlowNetwork::from_undirected(g);
  std::vector<BisectionInstance> instances;
  instances.push_back(edge_instance(net, sources, targets, epsilon, 0));
  std::vector<Cut> cuts;
  for (const CutEmission& e : run_instances(instances, 1))
    cuts.push_back(make_cut(g, instances[0].source_side_of(e)));
  return pareto_filter(std::move(cuts));
}

double success_probability(double alpha, int q) {
  if (!(alpha > 0.5 && alpha < 1.0) || q < 0) throw std::invalid_argument("success_probability needs 0.5 < alpha < 1, q >= 0");
  return 1.0 - std::pow(1.0 - 2.0 * alpha * (1.0 - alpha), q);
}

std::vector<std::pair<NodeId, NodeId>> sample_terminal_pairs(NodeId node_count, int q, std::uint64_t seed) {
  if (q < 1) throw std::invalid_argument("pair count must be at least 1");
  if (node_count < 2) throw std::invalid_argument("need at least two nodes to draw terminal pairs");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> pick(0, node_count - 1);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (int i = 0; i < q; ++i) {
    const NodeId s = pick(rng);
    NodeId t = pick(rng);
    while (t == s) t = pick(rng);
    pairs.emplace_back(s, t);
  }
  return pairs;
}

std::vector<CutEmission> run_instances(std::span<BisectionInstance> instances, int threads) {
  const std::size_t q = instances.size();
  if (q == 0) return {};
  const auto workers = static_cast<std::size_t>(std::clamp<std::int64_t>(threads, 1, static_cast<std::int64_t>(q)));
  constexpr auto kNone = std::numeric_limits<std::int64_t>::max();

  std::vector<std::vector<CutEmission>> fronts(q);
  std::vector<double> best_eps(q, std::numeric_limits<double>::infinity());
  std::vector<std::int64_t> met(q, kNone);
  std::int64_t threshold = kNone;
  std::int64_t round = 0;
  auto all_finished = [&] {
    return std::all_of(instances.begin(), instances.end(), [](const BisectionInstance& i) { return i.finished(); });
  };
  bool done = all_finished();

  auto step_one = [&](std::size_t i) {
    BisectionInstance& inst = instances[i];
    if (inst.finished()) return;
    if (inst.flow_value() > threshold) {
      inst.abort();
      return;
    }
    std::optional<CutEmission> e = inst.step();
    if (!e) return;
    e->sequence = round * static_cast<std::int64_t>(q) + static_cast<std::int64_t>(i);
    if (e->cut_size < met[i] &&
        meets_imbalance(e->large_side, e->small_side + e->large_side, inst.epsilon()))
      met[i] = e->cut_size;
    // Sizes are non-decreasing within an instance, so the local front only
    // changes at its tail.
    if (e->achieved_epsilon >= best_eps[i]) return;
    best_eps[i] = e->achieved_epsilon;
    auto& front = fronts[i];
    while (!front.empty() && front.back().cut_size == e->cut_size) front.pop_back();
    front.push_back(*e);
  };
  auto end_round = [&]() noexcept {
    for (std::int64_t m : met) threshold = std::min(threshold, m);
    ++round;
    done = all_finished();
  };

  {
    std::barrier sync(static_cast<std::ptrdiff_t>(workers), end_round);
    auto work = [&](std::size_t w) {
      while (!done) {
        for (std::size_t i = w; i < q; i += workers) step_one(i);
        sync.arrive_and_wait();
      }
    };
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
  }

  std::vector<CutEmission> all;
  for (auto& f : fronts) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end(), [](const CutEmission& a, const CutEmission& b) { return a.sequence < b.sequence; });
  return pareto_filter(std::move(all)).items();
}

ParetoSet<Cut> run_multi(const UndirectedGraph& g, const MultiOptions& options) {
  const auto pairs = sample_terminal_pairs(g.node_count(), options.pairs, options.seed);
  const FlowNetwork net = FlowNetwork::from_undirected(g);
  std::vector<BisectionInstance> instances;
  instances.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const NodeId s = pairs[i].first, t = pairs[i].second;
    instances.push_back(edge_instance(net, std::span(&s, 1), std::span(&t, 1), options.epsilon,
                                      static_cast<std::int32_t>(i)));
  }
  std::vector<Cut> cuts;
  for (const CutEmission& e : run_instances(instances, options.threads))
    cuts.push_back(make_cut(g, instances[static_cast<std::size_t>(e.instance)].source_side_of(e)));
  return pareto_filter(std::move(cuts));
}

}  // namespace flowcut
