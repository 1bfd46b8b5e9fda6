#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "flowcut/metrics.hpp"
#include "flowcut/ordering.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace flowcut;
using namespace flowcut::testing;

namespace {

int height_of(const UndirectedGraph& g, std::span<const NodeId> order) {
  return elimination_tree_height(elimination_game(g, order));
}

Separator point(std::int64_t size, std::int64_t side1, std::int64_t side2) {
  Separator s;
  s.separator_nodes.resize(static_cast<std::size_t>(size));
  s.side1 = side1;
  s.side2 = side2;
  s.small_side = std::min(side1, side2);
  s.large_side = std::max(side1, side2);
  s.achieved_epsilon = separator_epsilon(side1, side2);
  s.expansion = static_cast<double>(size) / static_cast<double>(s.small_side);
  return s;
}

}  // namespace

TEST_CASE("clique is ordered as a base case") {
  const auto order = compute_order(clique_graph(5));
  CHECK(order.size() == 5);
  for (Provenance p : order.provenance) CHECK(p == Provenance::clique_base);
  CHECK(std::string(to_string(Provenance::clique_base)) == "clique-base");
}

TEST_CASE("single node and empty graph") {
  const auto one = compute_order(UndirectedGraph::from_edges(1, {}));
  CHECK(one.order == std::vector<NodeId>{0});
  CHECK(one.provenance == std::vector<Provenance>{Provenance::leaf_component});
  CHECK(compute_order(UndirectedGraph::from_edges(0, {})).order.empty());
}

TEST_CASE("path of 7 reaches the optimal height") {
  const UndirectedGraph g = path_graph(7);
  std::vector<NodeId> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  int best = 100;
  do best = std::min(best, naive_elimination(g, perm).height);
  while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(best == 3);
  CHECK(height_of(g, tree_order(g)) == 3);
  OrderOptions opt;
  opt.tree_base = TreeBase::min_height;
  const auto order = compute_order(g, opt);
  CHECK(height_of(g, order.order) == 3);
  for (Provenance p : order.provenance) CHECK(p == Provenance::tree_base);
  // The fill-free default ends at the center.
  const auto chordal = compute_order(g);
  CHECK(chordal.order.back() == 3);
  CHECK(height_of(g, chordal.order) == 4);
}

TEST_CASE("perfect_elimination_tree_order") {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 100; ++round) {
    const NodeId n = 1 + static_cast<NodeId>(rng() % 40);
    const UndirectedGraph g = round % 2 ? random_tree(n, rng) : random_graph(n, 0.8 / n, rng);
    if (!is_forest(g)) continue;
    const auto order = perfect_elimination_tree_order(g);
    REQUIRE(is_permutation_of(order, n));
    const auto r = elimination_game(g, order);
    CHECK(r.fill_in == 0);
    CHECK(r.treewidth_bound == (g.edge_count() > 0 ? 1 : 0));
  }
  CHECK(perfect_elimination_tree_order(path_graph(2)) == std::vector<NodeId>{0, 1});
  CHECK(perfect_elimination_tree_order(path_graph(6)) == std::vector<NodeId>{0, 5, 1, 4, 2, 3});
  CHECK_THROWS_AS(perfect_elimination_tree_order(cycle_graph(3)), std::invalid_argument);
}

TEST_CASE("star contracts the leaves first") {
  const UndirectedGraph g = star_graph(8);
  const auto order = compute_order(g);
  CHECK(order.order.back() == 0);
  CHECK(height_of(g, order.order) == 2);
}

TEST_CASE("5x5 grid stays within treewidth bound 6") {
  const UndirectedGraph g = grid_graph(5, 5);
  const auto order = compute_order(g, OrderOptions{20, 1, 1});
  CHECK(elimination_game(g, order.order).treewidth_bound <= 6);
}

TEST_CASE("orders are permutations and deterministic") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    const NodeId n = 1 + static_cast<NodeId>(rng() % 120);
    const UndirectedGraph g = round % 2 ? random_graph(n, 2.0 / n, rng) : random_connected_graph(n, 2.5 / n, rng);
    const OrderOptions opt{6, rng(), 1};
    const auto a = compute_order(g, opt);
    CHECK(is_permutation_of(a.order, n));
    CHECK(a.provenance.size() == a.order.size());
    OrderOptions threaded = opt;
    threaded.threads = 3;
    CHECK(compute_order(g, threaded).order == a.order);
  }
}

TEST_CASE("forests get zero fill") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 30; ++round) {
    const NodeId n = 2 + static_cast<NodeId>(rng() % 60);
    const UndirectedGraph g = random_tree(n, rng);
    const auto r = elimination_game(g, compute_order(g).order);
    CHECK(r.fill_in == 0);
    CHECK(r.treewidth_bound == 1);
    CHECK(count_triangles(r) == 0);
  }
}

TEST_CASE("tree_ranking is optimal on every small tree") {
  for (NodeId n = 1; n <= 9; ++n) {
    for (const UndirectedGraph& t : all_trees(n)) {
      const auto rank = tree_ranking(t);
      // Valid ranking: any two equal ranks are separated by a larger one.
      for (NodeId u = 0; u < n; ++u)
        for (NodeId v : t.neighbors(u)) CHECK(rank[u] != rank[v]);
      const int used = *std::max_element(rank.begin(), rank.end());
      CHECK(used == brute_force_ranking_number(t));
      CHECK(height_of(t, tree_order(t)) == used);
    }
  }
}

TEST_CASE("tree_order rejects cycles") {
  CHECK_THROWS_AS(tree_order(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("is_clique and is_forest") {
  CHECK(is_clique(clique_graph(4)));
  CHECK(is_clique(UndirectedGraph::from_edges(1, {})));
  const UndirectedGraph k4_minus = UndirectedGraph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_FALSE(is_clique(k4_minus));
  CHECK(is_forest(UndirectedGraph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}})));
  CHECK_FALSE(is_forest(cycle_graph(3)));
}

TEST_CASE("select_separator") {
  ParetoSet<Separator> set = pareto_filter(std::vector<Separator>{point(1, 1, 9), point(2, 4, 5), point(3, 5, 5)});
  REQUIRE(set.size() == 3);
  SUBCASE("best expansion within the imbalance bound") {
    CHECK(select_separator(set).size() == 2);
  }
  SUBCASE("nothing qualifies: most balanced") {
    ParetoSet<Separator> skewed = pareto_filter(std::vector<Separator>{point(1, 1, 9), point(2, 2, 9)});
    CHECK(select_separator(skewed, 0.5).size() == 2);
  }
  SUBCASE("expansion ties prefer the smaller separator") {
    ParetoSet<Separator> tie = pareto_filter(std::vector<Separator>{point(1, 2, 6), point(2, 4, 4)});
    CHECK(select_separator(tie).size() == 1);
  }
  CHECK_THROWS(select_separator(ParetoSet<Separator>{}));
}

TEST_CASE("largest_biconnected_component") {
  SUBCASE("two triangles sharing a node, one with a pendant square") {
    const UndirectedGraph g = UndirectedGraph::from_edges(
        8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    const auto b = largest_biconnected_component(g);
    CHECK(b.nodes == std::vector<NodeId>{4, 5, 6, 7});
    CHECK(b.edge_count == 4);
    CHECK(b.leaving_edges == std::vector<Edge>{{4, 2}, {4, 3}});
  }
  SUBCASE("tree: a single edge") {
    const auto b = largest_biconnected_component(path_graph(4));
    CHECK(b.edge_count == 1);
    CHECK(b.nodes == std::vector<NodeId>{0, 1});
  }
  SUBCASE("cycle is one block") {
    CHECK(largest_biconnected_component(cycle_graph(6)).nodes.size() == 6);
  }
  SUBCASE("no edges") {
    CHECK(largest_biconnected_component(UndirectedGraph::from_edges(3, {})).nodes.empty());
  }
}

TEST_CASE("eliminate_degree2_chains") {
  SUBCASE("path disappears") {
    const auto r = eliminate_degree2_chains(path_graph(5));
    CHECK(r.reduced.node_count() == 0);
    CHECK(r.prefix.size() == 5);
  }
  SUBCASE("cycle shrinks to a triangle") {
    const auto r = eliminate_degree2_chains(cycle_graph(6));
    CHECK(r.kept == std::vector<NodeId>{0, 1, 5});
    CHECK(r.reduced.edge_count() == 3);
    CHECK(r.prefix.size() == 3);
  }
  SUBCASE("three chains between two hubs") {
    // hubs 0 and 1, chains 0-2-3-1, 0-4-5-1, 0-6-7-1
    const UndirectedGraph g = UndirectedGraph::from_edges(
        8, std::vector<Edge>{{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7}, {7, 1}});
    const auto r = eliminate_degree2_chains(g);
    CHECK(r.kept == std::vector<NodeId>{0, 1});
    CHECK(r.reduced.edge_count() == 1);
    CHECK(r.prefix.size() == 6);
  }
  SUBCASE("no degree-2 nodes") {
    const auto r = eliminate_degree2_chains(clique_graph(4));
    CHECK(r.prefix.empty());
    CHECK(r.reduced == clique_graph(4));
  }
}
