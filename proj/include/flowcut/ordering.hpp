#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flowcut/cut.hpp"
#include "flowcut/graph.hpp"
#include "flowcut/separator.hpp"

namespace flowcut {

enum class Provenance : std::uint8_t { tree_base, clique_base, degree2_chain, separator, leaf_component };

const char* to_string(Provenance p);

/// Elimination order: position i holds the i-th node to contract.
struct ContractionOrder {
  std::vector<NodeId> order;
  std::vector<Provenance> provenance;

  std::size_t size() const { return order.size(); }
};

/// How forest pieces are ordered: without fill-in (leaves first), or with
/// minimum elimination-tree height via tree_order.
enum class TreeBase : std::uint8_t { perfect_elimination, min_height };

struct OrderOptions {
  int pairs = 20;
  std::uint64_t seed = 0;
  int threads = 1;
  double max_separator_imbalance = 0.60;
  TreeBase tree_base = TreeBase::perfect_elimination;
};

/// Nested dissection order. Each connected piece is handled by the first
/// matching rule: single node, tree, clique, split off the largest
/// biconnected component, contract degree-2 chains, flow-based separator.
ContractionOrder compute_order(const UndirectedGraph& g, const OrderOptions& options = {});

/// Minimum expansion among members with imbalance at most `max_imbalance`
/// (ties: smaller separator, then smaller imbalance); the most balanced
/// member if none qualifies. Throws std::invalid_argument on an empty set.
const Separator& select_separator(const ParetoSet<Separator>& pareto, double max_imbalance = 0.60);

struct BiconnectedComponent {
  std::vector<NodeId> nodes;  // ascending
  std::int64_t edge_count = 0;
  /// Edges with exactly one endpoint in the component, as (inside, outside).
  std::vector<Edge> leaving_edges;
};

/// Biconnected component with the most edges; ties go to more nodes, then
/// to the smaller minimum node id. Empty for graphs without edges.
BiconnectedComponent largest_biconnected_component(const UndirectedGraph& g);

struct ChainReduction {
  UndirectedGraph reduced;
  std::vector<NodeId> kept;    // reduced node i is original node kept[i]
  std::vector<NodeId> prefix;  // removed nodes in elimination order
};

/// Removes maximal chains of degree-2 nodes in one pass. A chain between
/// two distinct nodes of other degree is replaced by a shortcut edge; a
/// chain hanging off a degree-1 end is removed together with that end; a
/// chain that returns to its start, or a cycle made only of degree-2 nodes,
/// is shrunk to a triangle.
ChainReduction eliminate_degree2_chains(const UndirectedGraph& g);

/// Optimal elimination order of a forest, from a minimum vertex ranking.
/// Throws std::invalid_argument if `forest` has a cycle.
std::vector<NodeId> tree_order(const UndirectedGraph& forest);

/// Fill-free elimination order of a forest: leaves are peeled layer by
/// layer, so every tree ends at a center node. Throws std::invalid_argument
/// if `forest` has a cycle.
std::vector<NodeId> perfect_elimination_tree_order(const UndirectedGraph& forest);

/// Vertex ranks (1-based) of a minimum ranking of `forest`.
std::vector<int> tree_ranking(const UndirectedGraph& forest);

bool is_clique(const UndirectedGraph& g);
bool is_forest(const UndirectedGraph& g);

}  // namespace flowcut
