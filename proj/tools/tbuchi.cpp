#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tbuchi/checker.hpp"
#include "tbuchi/dot.hpp"
#include "tbuchi/generators.hpp"
#include "tbuchi/parser.hpp"
#include "tbuchi/region_oracle.hpp"
#include "tbuchi/witness.hpp"
#include "tbuchi/zone_graph.hpp"

namespace {

constexpr int kExitNonEmpty = 10;
constexpr int kExitEmpty = 11;
constexpr int kExitError = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitNodeCap = 3;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string verdict_text(const tbuchi::Verdict& v) {
  if (v.is_empty) return "EMPTY";
  return "NONEMPTY (rule=" + std::string(tbuchi::rule_text(*v.rule)) + ")";
}

void print_stats(const tbuchi::SearchStats& s) {
  std::cout << "nodes_stored: " << s.nodes_stored << "\n"
            << "nodes_visited: " << s.nodes_visited << "\n"
            << "edges_traversed: " << s.edges_traversed << "\n"
            << "scc_count: " << s.scc_count << "\n"
            << "restarts: " << s.restarts << "\n"
            << "gzg_nodes_expanded: " << s.gzg_nodes_expanded << "\n";
}

std::string lasso_node_text(const tbuchi::Tba& a, const tbuchi::LassoNode& n) {
  std::string out = "(" + n.state_name + ", " + tbuchi::zone_text(n.zone, a);
  if (n.guess) {
    out += ", guess={";
    bool first = true;
    n.guess->for_each([&](tbuchi::ClockId c) {
      if (!first) out += ',';
      first = false;
      out += a.clock_name(c);
    });
    out += '}';
  }
  return out + ")";
}

void print_witness(const tbuchi::Tba& a, const tbuchi::Lasso& l) {
  const tbuchi::Tba replay =
      l.graph == tbuchi::GraphKind::zg_snz ? tbuchi::snz_transform(a) : a;
  auto edge_text = [&replay](int t) {
    return t < 0 ? std::string("tau") : transition_text(replay, static_cast<unsigned>(t));
  };
  std::cout << "witness_graph: " << graph_kind_text(l.graph) << "\n";
  std::cout << "stem:\n";
  for (std::size_t i = 0; i < l.stem_nodes.size(); ++i) {
    std::cout << "  " << lasso_node_text(replay, l.stem_nodes[i]) << "\n";
    if (i < l.stem_transitions.size())
      std::cout << "  --[" << edge_text(l.stem_transitions[i]) << "]->\n";
  }
  std::cout << "cycle:\n";
  for (std::size_t i = 0; i < l.cycle_nodes.size(); ++i) {
    std::cout << "  " << lasso_node_text(replay, l.cycle_nodes[i]) << "\n";
    std::cout << "  --[" << edge_text(l.cycle_transitions[i]) << "]->"
              << (i + 1 == l.cycle_nodes.size() ? " (back to start of cycle)" : "") << "\n";
  }
}

int run_check(const std::string& path, const std::string& algo, bool witness,
              std::size_t max_nodes) {
  const tbuchi::Tba a = tbuchi::parse_model_file(path);
  const auto start = Clock::now();

  if (algo == "oracle") {
    const bool nonempty = tbuchi::rg_check(a);
    std::cout << "VERDICT: " << (nonempty ? "NONEMPTY (rule=oracle)" : "EMPTY") << "\n";
    std::cout << "algo: oracle\n";
    std::cout << std::fixed << std::setprecision(3) << "wall_time_ms: " << ms_since(start)
              << "\n";
    return nonempty ? kExitNonEmpty : kExitEmpty;
  }

  tbuchi::CheckResult res;
  if (algo == "optimized")
    res = tbuchi::check_optimized(a, max_nodes);
  else if (algo == "gzg")
    res = tbuchi::check_gzg(a, max_nodes);
  else
    res = tbuchi::check_snz(a, max_nodes);
  const double elapsed = ms_since(start);

  std::cout << "VERDICT: " << verdict_text(res.verdict) << "\n";
  std::cout << "algo: " << algo << "\n";
  print_stats(res.stats);
  std::cout << std::fixed << std::setprecision(3) << "wall_time_ms: " << elapsed << "\n";

  if (witness && res.verdict.witness) {
    if (auto err = tbuchi::validate_witness(a, *res.verdict.witness, *res.verdict.rule)) {
      std::cerr << "error: witness failed validation: " << *err << "\n";
      return kExitError;
    }
    print_witness(a, *res.verdict.witness);
  }
  return res.verdict.is_empty ? kExitEmpty : kExitNonEmpty;
}

int run_compare(const std::string& path, std::size_t max_nodes) {
  const tbuchi::Tba a = tbuchi::parse_model_file(path);

  struct Row {
    std::string algo;
    std::string verdict;
    tbuchi::SearchStats stats;
    double ms = 0.0;
    std::optional<bool> is_empty;
  };
  std::vector<Row> rows;

  auto run_algo = [&](const std::string& name,
                      tbuchi::CheckResult (*fn)(const tbuchi::Tba&, std::size_t)) {
    Row r;
    r.algo = name;
    const auto start = Clock::now();
    const tbuchi::CheckResult res = fn(a, max_nodes);
    r.ms = ms_since(start);
    r.verdict = verdict_text(res.verdict);
    r.stats = res.stats;
    r.is_empty = res.verdict.is_empty;
    rows.push_back(std::move(r));
  };
  run_algo("optimized", tbuchi::check_optimized);
  run_algo("gzg", tbuchi::check_gzg);
  run_algo("snz", tbuchi::check_snz);

  {
    Row r;
    r.algo = "oracle";
    const auto start = Clock::now();
    try {
      const bool nonempty = tbuchi::rg_check(a);
      r.is_empty = !nonempty;
      r.verdict = nonempty ? "NONEMPTY (rule=oracle)" : "EMPTY";
    } catch (const tbuchi::OracleCapError&) {
      r.verdict = "SKIPPED (input beyond oracle caps)";
    }
    r.ms = ms_since(start);
    rows.push_back(std::move(r));
  }

  for (const Row& r : rows) {
    std::cout << "algo: " << r.algo << "\n"
              << "  verdict: " << r.verdict << "\n"
              << "  nodes_stored: " << r.stats.nodes_stored << "\n"
              << "  nodes_visited: " << r.stats.nodes_visited << "\n"
              << "  gzg_nodes_expanded: " << r.stats.gzg_nodes_expanded << "\n"
              << std::fixed << std::setprecision(3) << "  wall_time_ms: " << r.ms << "\n";
  }

  bool agree = true;
  std::optional<bool> first;
  for (const Row& r : rows) {
    if (!r.is_empty) continue;
    if (!first)
      first = r.is_empty;
    else
      agree = agree && (*first == *r.is_empty);
  }
  std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
  if (!agree) return kExitDisagreement;
  return *first ? kExitEmpty : kExitNonEmpty;
}

int run_gen(const std::string& family, unsigned n, int d, const std::string& variant,
            const std::string& out) {
  auto write_model = [](const tbuchi::Tba& a, const std::string& dest) {
    const std::string text = tbuchi::render_tba(a);
    if (dest.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(dest);
    if (!os) throw std::runtime_error("cannot write " + dest);
    os << text;
    std::cout << "wrote " << dest << "\n";
  };

  if (family == "fixtures") {
    if (out.empty())
      throw std::runtime_error("--out <directory> is required for --family fixtures");
    std::filesystem::create_directories(out);
    write_model(tbuchi::fixture_a1(), out + "/a1.tba");
    write_model(tbuchi::fixture_a2(), out + "/a2.tba");
    write_model(tbuchi::fixture_a3(), out + "/a3.tba");
    return 0;
  }
  if (family == "an") {
    write_model(tbuchi::gen_an(n, d), out);
    return 0;
  }
  const tbuchi::FischerVariant v = variant == "liveness" ? tbuchi::FischerVariant::liveness
                                                         : tbuchi::FischerVariant::mutex;
  write_model(tbuchi::gen_fischer(n, v), out);
  return 0;
}

int run_dot(const std::string& path, const std::string& graph, const std::string& out,
            std::size_t max_nodes) {
  const tbuchi::Tba a = tbuchi::parse_model_file(path);
  const std::string text =
      graph == "gzg" ? tbuchi::render_dot_gzg(a, max_nodes) : tbuchi::render_dot_zg(a, max_nodes);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    os << text;
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

std::size_t count_nodes(tbuchi::SymbolicGraph& g) {
  g.initial();
  for (tbuchi::NodeId u = 0; u < g.stored(); ++u) g.successors(u);
  return g.stored();
}

int run_stats(const std::string& path, std::size_t max_nodes) {
  const tbuchi::Tba a = tbuchi::parse_model_file(path);
  std::cout << "states: " << a.state_count() << "\n"
            << "clocks: " << a.clock_count() << "\n"
            << "transitions: " << a.transition_count() << "\n"
            << "max_constant: " << a.max_constant() << "\n";
  {
    tbuchi::ZoneGraphExplorer zg(a, max_nodes);
    std::cout << "zg_nodes: " << count_nodes(zg) << "\n";
  }
  {
    tbuchi::GzgExplorer gzg(a, max_nodes);
    std::cout << "gzg_nodes: " << count_nodes(gzg) << "\n";
  }
  {
    const tbuchi::Tba b = tbuchi::snz_transform(a);
    tbuchi::ZoneGraphExplorer zg(b, max_nodes);
    std::cout << "snz_zg_nodes: " << count_nodes(zg) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Büchi non-emptiness checking for timed automata via zone graphs"};
  app.require_subcommand(1);

  std::string model;
  std::string algo = "optimized";
  bool witness = false;
  std::size_t max_nodes = 0;

  CLI::App* check = app.add_subcommand("check", "decide whether some non-Zeno run visits "
                                                "accepting states infinitely often");
  check->add_option("model", model, "model file (single automaton or network)")->required();
  check->add_option("--algo", algo, "decision procedure")
      ->check(CLI::IsMember({"optimized", "gzg", "snz", "oracle"}))
      ->capture_default_str();
  check->add_flag("--witness", witness, "print a concrete lasso when non-empty");
  check->add_option("--max-nodes", max_nodes, "abort after this many stored nodes (0 = off)");

  CLI::App* compare = app.add_subcommand("compare", "run every procedure and cross-check");
  compare->add_option("model", model, "model file")->required();
  compare->add_option("--max-nodes", max_nodes, "abort after this many stored nodes (0 = off)");

  std::string family;
  unsigned gen_n = 2;
  int gen_d = 1;
  std::string variant = "mutex";
  std::string out;
  CLI::App* gen = app.add_subcommand("gen", "emit a benchmark family instance");
  gen->add_option("--family", family, "an | fischer | fixtures")
      ->required()
      ->check(CLI::IsMember({"an", "fischer", "fixtures"}));
  gen->add_option("--n", gen_n, "family size parameter")->capture_default_str();
  gen->add_option("--d", gen_d, "guard constant (an family)")->capture_default_str();
  gen->add_option("--variant", variant, "fischer property")
      ->check(CLI::IsMember({"mutex", "liveness"}))
      ->capture_default_str();
  gen->add_option("--out", out, "output file (directory for fixtures); default stdout");

  std::string graph = "zg";
  CLI::App* dot = app.add_subcommand("dot", "render a symbolic graph in Graphviz format");
  dot->add_option("model", model, "model file")->required();
  dot->add_option("--graph", graph, "which graph")
      ->check(CLI::IsMember({"zg", "gzg"}))
      ->capture_default_str();
  dot->add_option("--out", out, "output file; default stdout");
  dot->add_option("--max-nodes", max_nodes, "abort after this many nodes (0 = off)");

  CLI::App* stats = app.add_subcommand("stats", "print model and symbolic graph sizes");
  stats->add_option("model", model, "model file")->required();
  stats->add_option("--max-nodes", max_nodes, "abort after this many nodes (0 = off)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (check->parsed()) return run_check(model, algo, witness, max_nodes);
    if (compare->parsed()) return run_compare(model, max_nodes);
    if (gen->parsed()) return run_gen(family, gen_n, gen_d, variant, out);
    if (dot->parsed()) return run_dot(model, graph, out, max_nodes);
    if (stats->parsed()) return run_stats(model, max_nodes);
  } catch (const tbuchi::MaxNodesExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNodeCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
