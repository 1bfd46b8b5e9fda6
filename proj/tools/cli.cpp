#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "flowcut/bisection.hpp"
#include "flowcut/graph_io.hpp"
#include "flowcut/metrics.hpp"
#include "flowcut/ordering.hpp"
#include "flowcut/separator.hpp"

namespace flowcut::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string format;
  double epsilon = 0.03;
  int pairs = 20;
  std::uint64_t seed = 0;
  std::vector<NodeId> sources;
  std::vector<NodeId> targets;
  int threads = 1;
  NodeId sample_search_spaces = 0;
  std::string output;
  std::string order_file;
  TreeBase tree_base = TreeBase::perfect_elimination;
};

struct Failure {
  int code;
  std::string message;
};

std::string infer_format(const std::string& path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".gr")) return "dimacs";
  if (ends_with(".edges") || ends_with(".el") || ends_with(".txt")) return "edgelist";
  return "metis";
}

ParsedGraph load_graph(const RunConfig& c, std::ostream& err) {
  std::ifstream in(c.input);
  if (!in) throw Failure{io_error, "cannot open input file '" + c.input + "'"};
  const std::string format = c.format.empty() ? infer_format(c.input) : c.format;
  ParsedGraph parsed;
  try {
    if (format == "metis") parsed = parse_metis(in);
    else if (format == "dimacs") parsed = parse_dimacs_gr(in);
    else parsed = parse_edge_list(in);
  } catch (const ParseError& e) {
    throw Failure{io_error, c.input + ": " + e.what()};
  }
  for (const auto& w : parsed.warnings) err << "warning: " << c.input << ": " << w << '\n';
  err << "graph: n=" << parsed.graph.node_count() << " m=" << parsed.graph.edge_count() << '\n';
  return parsed;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Failure{io_error, "cannot write '" + path + "'"};
  return out;
}

void check_terminals(const RunConfig& c, NodeId n) {
  if (c.sources.empty() != c.targets.empty())
    throw Failure{config_error, "--source and --target must be given together"};
  for (const auto* set : {&c.sources, &c.targets})
    for (NodeId v : *set)
      if (v < 0 || v >= n) throw Failure{config_error, "terminal " + std::to_string(v) + " out of range"};
  for (NodeId v : c.sources)
    if (std::find(c.targets.begin(), c.targets.end(), v) != c.targets.end())
      throw Failure{config_error, "node " + std::to_string(v) + " is both source and target"};
}

void check_pairs_possible(const RunConfig& c, NodeId n) {
  if (c.sources.empty() && n < 2) throw Failure{config_error, "random terminal pairs need at least two nodes"};
}

template <class T, class Labels>
void write_results(const RunConfig& c, std::ostream& out, const ParetoSet<T>& set, std::string_view size_column,
                   std::string_view label_suffix, Labels labels) {
  if (c.output.empty()) {
    write_pareto_csv(out, set, size_column);
    return;
  }
  std::ofstream csv = open_output(c.output);
  write_pareto_csv(csv, set, size_column);
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::ofstream f = open_output(c.output + std::string(label_suffix) + std::to_string(i));
    write_labels(f, labels(set[i]));
  }
  if (!csv.flush()) throw Failure{io_error, "cannot write '" + c.output + "'"};
}

void cmd_cut(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ParsedGraph parsed = load_graph(c, err);
  const UndirectedGraph& g = parsed.graph;
  check_terminals(c, g.node_count());
  check_pairs_possible(c, g.node_count());
  const ParetoSet<Cut> set = c.sources.empty()
                                 ? run_multi(g, MultiOptions{c.pairs, c.epsilon, c.seed, c.threads})
                                 : pareto_cuts(g, c.sources, c.targets, c.epsilon);
  err << "pareto cuts: " << set.size() << '\n';
  write_results(c, out, set, "cut_size", ".sides.", [](const Cut& cut) { return cut.side_assignment; });
}

void cmd_separator(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ParsedGraph parsed = load_graph(c, err);
  const UndirectedGraph& g = parsed.graph;
  check_terminals(c, g.node_count());
  check_pairs_possible(c, g.node_count());
  ParetoSet<Separator> set;
  if (c.sources.empty()) {
    set = separator_pareto(g, MultiOptions{c.pairs, c.epsilon, c.seed, c.threads});
  } else {
    if (c.sources.size() != 1 || c.targets.size() != 1)
      throw Failure{config_error, "separator takes exactly one --source and one --target"};
    set = pareto_filter(enumerate_separators(g, c.sources[0], c.targets[0], c.epsilon));
  }
  err << "pareto separators: " << set.size() << '\n';
  write_results(c, out, set, "separator_size", ".sep.", [](const Separator& s) { return s.labels; });
}

std::optional<SearchSpaceSample> sample_of(const RunConfig& c, NodeId n) {
  if (c.sample_search_spaces == 0) return std::nullopt;
  if (c.sample_search_spaces > n)
    throw Failure{config_error, "--sample-search-spaces exceeds the node count " + std::to_string(n)};
  return SearchSpaceSample{c.sample_search_spaces, c.seed};
}

void cmd_order(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ParsedGraph parsed = load_graph(c, err);
  const UndirectedGraph& g = parsed.graph;
  const auto sample = sample_of(c, g.node_count());
  const ContractionOrder order = compute_order(g, OrderOptions{c.pairs, c.seed, c.threads, 0.60, c.tree_base});
  if (!c.output.empty()) {
    std::ofstream f = open_output(c.output);
    write_order(f, order.order);
    if (!f.flush()) throw Failure{io_error, "cannot write '" + c.output + "'"};
  }
  write_report(out, evaluate_order(g, order.order, sample));
}

void cmd_evaluate_order(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ParsedGraph parsed = load_graph(c, err);
  const UndirectedGraph& g = parsed.graph;
  const auto sample = sample_of(c, g.node_count());
  std::ifstream in(c.order_file);
  if (!in) throw Failure{io_error, "cannot open order file '" + c.order_file + "'"};
  std::vector<NodeId> order;
  try {
    order = read_order(in, g.node_count());
  } catch (const ParseError& e) {
    throw Failure{config_error, c.order_file + ": " + e.what()};
  }
  write_report(out, evaluate_order(g, order, sample));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Pareto cuts, node separators and nested dissection orders"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", c.input, "Graph file")->required();
    sub->add_option("--format,-f", c.format, "metis | dimacs | edgelist (default: from the file extension)")
        ->check(CLI::IsMember({"metis", "dimacs", "edgelist"}));
    sub->add_option("--pairs,-q", c.pairs, "Number of random st-pairs")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_option("--threads,-j", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto partition = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--epsilon,-e", c.epsilon, "Imbalance bound in [0,1]")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--source,-s", c.sources, "Source node (0-based, repeatable)");
    sub->add_option("--target,-t", c.targets, "Target node (0-based, repeatable)");
    sub->add_option("--output,-o", c.output, "CSV path; label files get a .sides.<i>/.sep.<i> suffix");
  };
  auto metrics = [&](CLI::App* sub) {
    sub->add_option("--sample-search-spaces", c.sample_search_spaces, "Evaluate K random search spaces")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* cut = app.add_subcommand("cut", "Pareto set of balanced edge cuts");
  partition(cut);
  CLI::App* sep = app.add_subcommand("separator", "Pareto set of node separators");
  partition(sep);
  CLI::App* order = app.add_subcommand("order", "Nested dissection contraction order and its metrics");
  common(order);
  metrics(order);
  order->add_option("--output,-o", c.output, "Order file");
  order->add_option("--tree-base", c.tree_base, "Forest pieces: chordal (no fill-in) | min-height")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, TreeBase>{{"chordal", TreeBase::perfect_elimination}, {"min-height", TreeBase::min_height}}));
  CLI::App* eval = app.add_subcommand("evaluate-order", "Metrics of a given contraction order");
  common(eval);
  metrics(eval);
  eval->add_option("--order", c.order_file, "Order file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (cut->parsed()) cmd_cut(c, out, err);
    else if (sep->parsed()) cmd_separator(c, out, err);
    else if (order->parsed()) cmd_order(c, out, err);
    else cmd_evaluate_order(c, out, err);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return config_error;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  err << "wall_time_s=" << elapsed.count() << '\n';
  return ok;
}

}  // namespace flowcut::cli
