#include <doctest.h>

#include <random>

#include "flowcut/bisection.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace flowcut;
using namespace flowcut::testing;

namespace {

template <class T>
bool dominance_free(const ParetoSet<T>& set) {
  for (std::size_t i = 1; i < set.size(); ++i)
    if (!(set[i].size() > set[i - 1].size() && set[i].achieved_epsilon < set[i - 1].achieved_epsilon)) return false;
  return true;
}

bool sides_connected(const UndirectedGraph& g, const Cut& c) {
  std::vector<std::uint8_t> other(c.side_assignment.size());
  for (std::size_t i = 0; i < other.size(); ++i) other[i] = !c.side_assignment[i];
  return induces_connected_subgraph(g, c.side_assignment) && induces_connected_subgraph(g, other);
}

}  // namespace

TEST_CASE("achieved_epsilon") {
  CHECK(achieved_epsilon(5, 5) == 0.0);
  CHECK(achieved_epsilon(4, 6) == doctest::Approx(0.2));
  CHECK(achieved_epsilon(1, 9) == doctest::Approx(0.8));
  CHECK_THROWS(achieved_epsilon(6, 4));
  CHECK_THROWS(achieved_epsilon(0, 0));
}

TEST_CASE("meets_imbalance uses the ceiling bound") {
  CHECK(meets_imbalance(3, 5, 0.0));
  CHECK_FALSE(meets_imbalance(4, 5, 0.0));
  CHECK(meets_imbalance(5, 10, 0.0));
  CHECK_FALSE(meets_imbalance(6, 10, 0.0));
  CHECK(meets_imbalance(2431, 4720, 0.03));
  CHECK_FALSE(meets_imbalance(2432, 4720, 0.03));
}

TEST_CASE("pareto_filter") {
  auto point = [](std::int64_t size, double eps) {
    CutEmission e;
    e.cut_size = size;
    e.achieved_epsilon = eps;
    return e;
  };
  SUBCASE("same size keeps the more balanced one") {
    const auto set = pareto_filter(std::vector<CutEmission>{point(3, 0.5), point(3, 0.2)});
    REQUIRE(set.size() == 1);
    CHECK(set[0].achieved_epsilon == 0.2);
  }
  SUBCASE("incomparable points both survive") {
    CHECK(pareto_filter(std::vector<CutEmission>{point(2, 0.5), point(3, 0.1)}).size() == 2);
  }
  SUBCASE("exact ties keep the first") {
    auto a = point(2, 0.5), b = point(2, 0.5);
    a.instance = 7;
    b.instance = 3;
    const auto set = pareto_filter(std::vector<CutEmission>{a, b});
    REQUIRE(set.size() == 1);
    CHECK(set[0].instance == 7);
  }
  SUBCASE("dominated points disappear") {
    const auto set = pareto_filter(std::vector<CutEmission>{point(4, 0.3), point(2, 0.2), point(3, 0.6)});
    REQUIRE(set.size() == 1);
    CHECK(set[0].cut_size == 2);
  }
}

TEST_CASE("path of 10 reaches a perfectly balanced 1-cut") {
  const UndirectedGraph g = path_graph(10);
  const NodeId s = 0, t = 9;
  const auto cuts = enumerate_cuts(g, std::span(&s, 1), std::span(&t, 1), 0.0);
  REQUIRE_FALSE(cuts.empty());
  for (const Cut& c : cuts) CHECK(c.size() == 1);
  CHECK(cuts.back().small_side == 5);
  CHECK(cuts.back().large_side == 5);
  const auto set = pareto_cuts(g, std::span(&s, 1), std::span(&t, 1), 0.0);
  REQUIRE(set.size() == 1);
  CHECK(set[0].size() == 1);
  CHECK(set[0].achieved_epsilon == 0.0);
  CHECK(set[0].cut_arcs == std::vector<Edge>{{4, 5}});
}

TEST_CASE("first cut equals the minimum st-cut") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const NodeId n = 2 + static_cast<NodeId>(rng() % 9);
    const UndirectedGraph g = random_connected_graph(n, 0.3, rng);
    const NodeId s = static_cast<NodeId>(rng() % n);
    NodeId t = static_cast<NodeId>(rng() % n);
    if (t == s) t = (s + 1) % n;
    const auto cuts = enumerate_cuts(g, std::span(&s, 1), std::span(&t, 1), 0.0);
    REQUIRE_FALSE(cuts.empty());
    CHECK(cuts.front().size() == brute_force_min_cut(g, std::span(&s, 1), std::span(&t, 1)));
  }
}

TEST_CASE("emitted cuts: separation, connectivity and progress") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 150; ++round) {
    const NodeId n = 2 + static_cast<NodeId>(rng() % 40);
    const UndirectedGraph g = random_connected_graph(n, 3.0 / n, rng);
    const NodeId s = static_cast<NodeId>(rng() % n);
    NodeId t = static_cast<NodeId>(rng() % n);
    if (t == s) t = (s + 1) % n;
    const double eps = (rng() % 4) * 0.05;
    const auto cuts = enumerate_cuts(g, std::span(&s, 1), std::span(&t, 1), eps);
    REQUIRE_FALSE(cuts.empty());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      const Cut& c = cuts[i];
      CHECK(c.side_assignment[s] == 1);
      CHECK(c.side_assignment[t] == 0);
      CHECK(c.small_side + c.large_side == n);
      CHECK(sides_connected(g, c));
      if (i > 0) {
        CHECK(c.size() >= cuts[i - 1].size());
        if (c.size() == cuts[i - 1].size()) CHECK(c.achieved_epsilon <= 1.0);
      }
    }
    // Everything but the last cut failed the bound.
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      CHECK_FALSE(meets_imbalance(cuts[i].large_side, n, eps));
  }
}

TEST_CASE("lazy emission counts match the materialized cut") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    const NodeId n = 2 + static_cast<NodeId>(rng() % 30);
    const UndirectedGraph g = random_graph(n, 0.15, rng);
    const FlowNetwork net = FlowNetwork::from_undirected(g);
    BisectionInstance inst(net, {0}, {n - 1}, 0.0, std::make_unique<EdgeCutModel>(n));
    std::int64_t last_flow = 0;
    while (!inst.finished()) {
      const auto e = inst.step();
      CHECK(inst.flow_value() >= last_flow);
      last_flow = inst.flow_value();
      if (!e) continue;
      const Cut c = make_cut(g, inst.source_side_of(*e));
      CHECK(c.size() == e->cut_size);
      CHECK(e->cut_size == inst.flow_value());
      CHECK(c.small_side == e->small_side);
      CHECK(c.large_side == e->large_side);
      CHECK(c.achieved_epsilon == e->achieved_epsilon);
    }
  }
}

TEST_CASE("disconnected terminals give a single empty cut") {
  const UndirectedGraph g = UndirectedGraph::from_edges(5, std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}});
  const NodeId s = 0, t = 4;
  const auto cuts = enumerate_cuts(g, std::span(&s, 1), std::span(&t, 1), 0.0);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].size() == 0);
  CHECK(cuts[0].small_side == 2);
}

TEST_CASE("enumerate_cuts rejects bad input") {
  const NodeId zero = 0;
  CHECK_THROWS_AS(enumerate_cuts(path_graph(3), std::span(&zero, 1), std::span(&zero, 1), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cuts(UndirectedGraph::from_edges(0, {}), std::span(&zero, 1), std::span(&zero, 1), 0.0),
                  std::invalid_argument);
  const NodeId two = 2;
  CHECK_THROWS_AS(enumerate_cuts(path_graph(3), std::span(&zero, 1), std::span(&two, 1), 1.5), std::invalid_argument);
}

TEST_CASE("success_probability") {
  CHECK(success_probability(0.665, 20) >= 0.9999);
  CHECK(success_probability(0.9, 20) == doctest::Approx(0.9811).epsilon(1e-4));
  CHECK(success_probability(0.7, 0) == 0.0);
  CHECK_THROWS(success_probability(0.5, 3));
  CHECK_THROWS(success_probability(1.0, 3));
  CHECK_THROWS(success_probability(0.7, -1));
}

TEST_CASE("sample_terminal_pairs") {
  const auto a = sample_terminal_pairs(10, 50, 3);
  CHECK(a == sample_terminal_pairs(10, 50, 3));
  CHECK(a != sample_terminal_pairs(10, 50, 4));
  for (auto [s, t] : a) {
    CHECK(s != t);
    CHECK(s >= 0);
    CHECK(t < 10);
  }
  CHECK_THROWS(sample_terminal_pairs(10, 0, 1));
  CHECK_THROWS(sample_terminal_pairs(1, 3, 1));
}

TEST_CASE("run_multi with one pair matches the single-pair loop") {
  const UndirectedGraph g = path_graph(12);
  const auto [s, t] = sample_terminal_pairs(12, 1, 42)[0];
  const auto multi = run_multi(g, MultiOptions{1, 0.0, 42, 1});
  const auto single = pareto_cuts(g, std::span(&s, 1), std::span(&t, 1), 0.0);
  REQUIRE(multi.size() == single.size());
  for (std::size_t i = 0; i < multi.size(); ++i) {
    CHECK(multi[i].cut_arcs == single[i].cut_arcs);
    CHECK(multi[i].side_assignment == single[i].side_assignment);
  }
}

TEST_CASE("duplicate instances do not change the front") {
  std::mt19937_64 rng(17);
  const UndirectedGraph g = random_connected_graph(40, 0.08, rng);
  const FlowNetwork net = FlowNetwork::from_undirected(g);
  auto make = [&](std::int32_t id) {
    return BisectionInstance(net, {3}, {29}, 0.0, std::make_unique<EdgeCutModel>(g.node_count()), id);
  };
  std::vector<BisectionInstance> one, two;
  one.push_back(make(0));
  two.push_back(make(0));
  two.push_back(make(1));
  const auto a = run_instances(one, 1), b = run_instances(two, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].cut_size == b[i].cut_size);
    CHECK(a[i].achieved_epsilon == b[i].achieved_epsilon);
    CHECK(b[i].instance == 0);
  }
}

TEST_CASE("run_multi: Pareto output, determinism across thread counts") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 20; ++round) {
    const NodeId n = 20 + static_cast<NodeId>(rng() % 80);
    const UndirectedGraph g = random_connected_graph(n, 2.5 / n, rng);
    const MultiOptions opt{8, 0.03 * (round % 3), rng(), 1};
    const auto base = run_multi(g, opt);
    CHECK(dominance_free(base));
    REQUIRE_FALSE(base.empty());
    CHECK(base.best_within(opt.epsilon) != nullptr);
    for (const Cut& c : base) CHECK(sides_connected(g, c));
    for (int threads : {2, 3, 8}) {
      MultiOptions o = opt;
      o.threads = threads;
      const auto other = run_multi(g, o);
      REQUIRE(other.size() == base.size());
      for (std::size_t i = 0; i < base.size(); ++i) CHECK(other[i].side_assignment == base[i].side_assignment);
    }
  }
}

TEST_CASE("run_multi errors") {
  CHECK_THROWS_AS(run_multi(path_graph(5), MultiOptions{0, 0.0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(run_multi(path_graph(1), MultiOptions{3, 0.0, 1, 1}), std::invalid_argument);
}

TEST_CASE("multi-terminal sets") {
  const UndirectedGraph g = grid_graph(4, 6);
  const std::vector<NodeId> s{0, 6, 12, 18}, t{5, 11, 17, 23};
  const auto cuts = enumerate_cuts(g, s, t, 0.0);
  REQUIRE_FALSE(cuts.empty());
  CHECK(cuts.front().size() == brute_force_min_cut(g, s, t));
  CHECK(cuts.back().size() == 4);
  CHECK(cuts.back().small_side == 12);
}
