#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flowcut/cut.hpp"
#include "flowcut/flow_network.hpp"
#include "flowcut/flow_state.hpp"
#include "flowcut/graph.hpp"
#include "flowcut/piercing.hpp"

namespace flowcut {

struct PartitionCounts {
  std::int64_t size = 0;
  std::int64_t source_side = 0;
  std::int64_t target_side = 0;
};

/// Translates the flow state at emission time into cut size and side sizes.
/// One model object belongs to one instance.
class CutModel {
 public:
  virtual ~CutModel() = default;

  /// Contribution of network node `v` to the side count once it joins the
  /// core of `side`.
  virtual int core_weight(Side side, NodeId v) const = 0;

  /// `weighted_core` is the sum of core_weight over the core of `side`.
  virtual PartitionCounts count(const FlowState& state, Side side, std::span<const ArcId> cut,
                                std::int64_t weighted_core) = 0;
};

/// Edge cuts: every network node is a graph node and every cut arc counts.
class EdgeCutModel final : public CutModel {
 public:
  explicit EdgeCutModel(NodeId node_count) : n_(node_count) {}
  int core_weight(Side, NodeId) const override { return 1; }
  PartitionCounts count(const FlowState& state, Side side, std::span<const ArcId> cut,
                        std::int64_t weighted_core) override;

 private:
  NodeId n_;
};

/// One run of the core loop for a fixed pair of terminal sets.
///
/// Each step() performs one augmentation, or assimilates the smaller
/// reachable side, emits its cut and pierces it. Emitted cuts are recorded
/// lazily: per node the emission index at which it joined S or T is kept, so
/// any emitted partition can be rebuilt later with source_side_of().
class BisectionInstance {
 public:
  BisectionInstance(const FlowNetwork& net, std::vector<NodeId> sources, std::vector<NodeId> targets,
                    double epsilon, std::unique_ptr<CutModel> model, std::int32_t id = 0);

  BisectionInstance(BisectionInstance&&) noexcept = default;

  std::optional<CutEmission> step();

  bool finished() const { return finished_; }
  void abort() { finished_ = true; }
  std::int64_t flow_value() const { return state_.flow_value(); }
  std::int32_t id() const { return id_; }
  double epsilon() const { return epsilon_; }
  const FlowState& state() const { return state_; }
  const FlowNetwork& network() const { return *net_; }
  const DistanceTables& tables() const { return tables_; }

  /// Per network node, 1 if it is on the source side of emission `e`.
  std::vector<std::uint8_t> source_side_of(const CutEmission& e) const;

 private:
  static constexpr std::int32_t kNever = std::numeric_limits<std::int32_t>::max();

  const FlowNetwork* net_;
  std::vector<NodeId> sources_;
  std::vector<NodeId> targets_;
  double epsilon_;
  std::unique_ptr<CutModel> model_;
  std::int32_t id_;
  DistanceTables tables_;
  FlowState state_;
  std::array<std::vector<std::int32_t>, 2> joined_;
  std::array<std::int64_t, 2> weighted_core_{};
  std::int32_t emissions_ = 0;
  bool finished_ = false;
};

/// Edge cut of graph `g` rebuilt from a source-side node set.
Cut make_cut(const UndirectedGraph& g, std::span<const std::uint8_t> source_side);

/// Every cut emitted by the core loop for the given terminals, in emission
/// order. Each cut is materialized, so this is meant for small inputs.
std::vector<Cut> enumerate_cuts(const UndirectedGraph& g, std::span<const NodeId> sources,
                                std::span<const NodeId> targets, double epsilon);

/// Pareto set of the core loop for one pair of terminal sets.
ParetoSet<Cut> pareto_cuts(const UndirectedGraph& g, std::span<const NodeId> sources,
                           std::span<const NodeId> targets, double epsilon);

/// 1 - (1 - 2a(1-a))^q. Throws std::invalid_argument unless 0.5 < a < 1 and
/// q >= 0.
double success_probability(double alpha, int q);

/// q pairs of distinct nodes from mt19937_64 seeded with `seed`.
std::vector<std::pair<NodeId, NodeId>> sample_terminal_pairs(NodeId node_count, int q, std::uint64_t seed);

struct MultiOptions {
  int pairs = 20;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Runs instances round by round until each has finished. An instance is
/// aborted once its flow exceeds the smallest cut emitted so far that meets
/// the imbalance bound. Returns the Pareto front of all emissions; ties are
/// resolved by emission sequence, so the result does not depend on the
/// number of threads.
std::vector<CutEmission> run_instances(std::span<BisectionInstance> instances, int threads);

/// General cuts from `pairs` random st-pairs.
ParetoSet<Cut> run_multi(const UndirectedGraph& g, const MultiOptions& options);

}  // namespace flowcut
