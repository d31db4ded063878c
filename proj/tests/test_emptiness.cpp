#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "doctest.h"
#include "tbuchi/checker.hpp"
#include "tbuchi/generators.hpp"
#include "tbuchi/scc.hpp"

using namespace tbuchi;

namespace {

// Hand-built graph with explicit accepting/clear flags and edge profiles, so
// the search engine can be exercised independently of any zone machinery.
class TestGraph : public SymbolicGraph {
 public:
  unsigned add_node(bool accepting, bool clear = false) {
    accepting_.push_back(accepting);
    clear_.push_back(clear);
    out_.emplace_back();
    expanded_flag_.push_back(false);
    return static_cast<unsigned>(accepting_.size() - 1);
  }

  void add_edge(unsigned src, unsigned dst, int transition = 0, EdgeProfile profile = {}) {
    out_[src].push_back(OutEdge{dst, transition, profile});
  }

  NodeId initial() override { return 0; }
  const std::vector<OutEdge>& successors(NodeId n) override {
    if (!expanded_flag_[n]) {
      expanded_flag_[n] = true;
      ++expansions_;
    }
    return out_[n];
  }
  bool accepting(NodeId n) const override { return accepting_[n]; }
  bool clear_node(NodeId n) const override { return clear_[n]; }
  unsigned node_state(NodeId n) const override { return n; }
  const Zone& node_zone(NodeId) const override { return zone_; }
  std::optional<ClockSet> node_guess(NodeId) const override { return std::nullopt; }
  std::size_t stored() const override { return accepting_.size(); }
  std::size_t expanded() const override { return expansions_; }

 private:
  std::vector<bool> accepting_;
  std::vector<bool> clear_;
  std::vector<std::vector<OutEdge>> out_;
  std::vector<bool> expanded_flag_;
  std::size_t expansions_ = 0;
  Zone zone_ = Zone::origin(1);
};

std::optional<Rule> accepting_means_done(const SccSummary& s) {
  if (s.accepting_seen) return Rule::snz;
  return std::nullopt;
}

SccHit plain_hit(const MaximalScc& scc, Rule rule, CouvreurEngine&) {
  return SccHit{rule, scc, std::nullopt};
}

EdgeProfile bounded_on(ClockId c) {
  EdgeProfile p;
  p.bounded = ClockSet::single(c);
  return p;
}

EdgeProfile reset_of(ClockId c) {
  EdgeProfile p;
  p.reset = ClockSet::single(c);
  return p;
}

}  // namespace

TEST_CASE("summaries fold node flags and edge profiles") {
  SccSummary s;
  s.add_node(false, false);
  CHECK(s == SccSummary{});
  s.add_node(true, false);
  s.add_node(false, true);
  CHECK(s.accepting_seen);
  CHECK(s.clear_seen);

  EdgeProfile p;
  p.zero_checked = ClockSet::single(2);
  p.bounded = ClockSet::of({1, 2});
  p.reset = ClockSet::single(1);
  p.lower1 = ClockSet::single(3);
  s.add_profile(p);
  CHECK(s.zero_check_seen);
  CHECK(s.bounded == ClockSet::of({1, 2}));
  CHECK(s.resets == ClockSet::single(1));
  CHECK(s.lower1 == ClockSet::single(3));

  // tau edges carry no clock facts
  EdgeProfile tau;
  tau.zero_checked = ClockSet::single(3);
  tau.is_tau = true;
  SccSummary before = s;
  s.add_profile(tau);
  CHECK(s == before);

  SccSummary other;
  other.add_node(false, false);
  other.add_profile(reset_of(4));
  other.merge(s);
  SccSummary merged = s;
  merged.merge(other);
  CHECK(other == merged);  // merge is monotone and commutative on these
  CHECK(other.resets == ClockSet::of({1, 4}));
}

TEST_CASE("an accepting self-loop is found after expanding a single node") {
  TestGraph g;
  g.add_node(true);
  g.add_node(false);
  g.add_edge(0, 0);
  g.add_edge(0, 1);  // never reached: the verdict fires first

  std::size_t maximal_calls = 0;
  CouvreurEngine eng(g, accepting_means_done, plain_hit,
                     [&](const MaximalScc&, CouvreurEngine&) -> std::optional<SccHit> {
                       ++maximal_calls;
                       return std::nullopt;
                     });
  SearchStats st;
  auto hit = eng.run(st);
  REQUIRE(hit.has_value());
  CHECK(hit->rule == Rule::snz);
  CHECK(hit->scc.members == std::vector<NodeId>{0});
  CHECK(hit->scc.edges.size() == 1);
  CHECK(st.nodes_visited == 1);
  CHECK(maximal_calls == 0);
}

TEST_CASE("acyclic graphs complete with one trivial component per node") {
  TestGraph g;
  g.add_node(false);
  g.add_node(true);  // accepting but on no cycle: must not trigger a verdict
  g.add_node(false);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);

  CouvreurEngine eng(g, accepting_means_done, plain_hit,
                     [](const MaximalScc&, CouvreurEngine&) { return std::nullopt; });
  SearchStats st;
  CHECK_FALSE(eng.run(st).has_value());
  CHECK(st.nodes_visited == 3);
  CHECK(st.nodes_stored == 3);
  CHECK(st.edges_traversed == 3);
  CHECK(st.scc_count == 3);
}

TEST_CASE("closing a cycle merges the candidate roots and tests the summary") {
  TestGraph g;
  g.add_node(false);
  g.add_node(false);
  g.add_node(true);
  g.add_edge(0, 1, 5, bounded_on(1));
  g.add_edge(1, 2, 7);
  g.add_edge(2, 0, 9, reset_of(1));

  SccSummary seen;
  auto success = [&](const SccSummary& s) -> std::optional<Rule> {
    if (!s.accepting_seen) return std::nullopt;
    seen = s;
    return Rule::zero_check_free;
  };
  CouvreurEngine eng(g, success, plain_hit,
                     [](const MaximalScc&, CouvreurEngine&) { return std::nullopt; });
  SearchStats st;
  auto hit = eng.run(st);
  REQUIRE(hit.has_value());
  CHECK(hit->scc.members == std::vector<NodeId>{0, 1, 2});
  CHECK(hit->scc.edges.size() == 3);
  // the summary at the closing edge folded both tree-edge profiles
  CHECK(seen.bounded == ClockSet::single(1));
  CHECK(seen.resets == ClockSet::single(1));
  CHECK(seen.accepting_seen);
  CHECK_FALSE(seen.zero_check_seen);
}

TEST_CASE("failed components are offered for re-examination exactly once") {
  TestGraph g;
  g.add_node(false);
  g.add_node(false);
  g.add_edge(0, 1);
  g.add_edge(1, 0);

  std::size_t maximal_calls = 0;
  std::optional<MaximalScc> offered;
  CouvreurEngine eng(g, accepting_means_done, plain_hit,
                     [&](const MaximalScc& scc, CouvreurEngine&) -> std::optional<SccHit> {
                       ++maximal_calls;
                       offered = scc;
                       return std::nullopt;
                     });
  SearchStats st;
  CHECK_FALSE(eng.run(st).has_value());
  CHECK(maximal_calls == 1);
  CHECK(st.scc_count == 1);
  REQUIRE(offered.has_value());
  CHECK(offered->members.size() == 2);
  CHECK(offered->edges.size() == 2);
  CHECK_FALSE(offered->summary.accepting_seen);

  // a re-examination verdict propagates out of the run
  TestGraph g2;
  g2.add_node(false);
  g2.add_edge(0, 0);
  CouvreurEngine eng2(g2, accepting_means_done, plain_hit,
                      [](const MaximalScc& scc, CouvreurEngine&) -> std::optional<SccHit> {
                        return SccHit{Rule::lower_bound, scc, std::nullopt};
                      });
  SearchStats st2;
  auto hit = eng2.run(st2);
  REQUIRE(hit.has_value());
  CHECK(hit->rule == Rule::lower_bound);
}

TEST_CASE("the search remembers its tree paths and edge cursors") {
  TestGraph g;
  g.add_node(false);
  g.add_node(false);
  g.add_node(false);
  g.add_edge(0, 1, 4);
  g.add_edge(1, 2, 6);

  CouvreurEngine eng(g, accepting_means_done, plain_hit,
                     [](const MaximalScc&, CouvreurEngine&) { return std::nullopt; });
  SearchStats st;
  CHECK_FALSE(eng.run(st).has_value());
  const auto path = eng.path_from_initial(2);
  CHECK(path.nodes == std::vector<NodeId>{0, 1, 2});
  CHECK(path.transitions == std::vector<int>{4, 6});
  CHECK(eng.path_from_initial(0).nodes == std::vector<NodeId>{0});
  CHECK(eng.traversed_count(0) == 1);
  CHECK(eng.traversed_count(2) == 0);
}

TEST_CASE("freezing a component keeps flags and relabels edges") {
  TestGraph g;
  g.add_node(false);
  g.add_node(true, true);
  g.add_node(false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 1, 3, reset_of(2));

  std::optional<MaximalScc> offered;
  CouvreurEngine eng(g, [](const SccSummary&) { return std::nullopt; }, plain_hit,
                     [&](const MaximalScc& scc, CouvreurEngine&) -> std::optional<SccHit> {
                       offered = scc;
                       return std::nullopt;
                     });
  SearchStats st;
  eng.run(st);
  REQUIRE(offered.has_value());
  const ExplicitGraphData data = freeze_scc(g, *offered);
  REQUIRE(data.nodes.size() == 2);
  REQUIRE(data.edges.size() == 2);
  for (const ExplicitNode& n : data.nodes) {
    CHECK((n.orig == 1 || n.orig == 2));
    CHECK(n.accepting == (n.orig == 1));
    CHECK(n.clear == (n.orig == 1));
  }
  for (const ExplicitEdge& e : data.edges) {
    CHECK(e.src < 2);
    CHECK(e.dst < 2);
    CHECK(data.nodes[e.src].orig != data.nodes[e.dst].orig);
  }
}

TEST_CASE("explicit component decomposition is a correct tarjan") {
  ExplicitGraphData data;
  for (unsigned i = 0; i < 5; ++i) data.nodes.push_back(ExplicitNode{i, false, false});
  const auto edge = [](unsigned s, unsigned d) { return ExplicitEdge{s, d, 0, {}}; };
  data.edges = {edge(0, 1), edge(1, 0), edge(1, 2), edge(2, 3), edge(3, 2), edge(4, 4)};
  auto sccs = explicit_sccs(data);
  REQUIRE(sccs.size() == 3);
  std::vector<std::vector<unsigned>> sorted;
  for (auto& c : sccs) {
    std::sort(c.begin(), c.end());
    sorted.push_back(c);
  }
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::vector<unsigned>>{{0, 1}, {2, 3}, {4}});
}

TEST_CASE("blocked components are resolved by removing bounding edges") {
  const auto success = [](const SccSummary& s) -> std::optional<Rule> {
    if (s.accepting_seen && s.bounded.subset_of(s.resets)) return Rule::zero_check_free;
    return std::nullopt;
  };

  // the summary already satisfies the predicate: verdict without any removal
  ExplicitGraphData ok;
  ok.nodes = {ExplicitNode{10, true, false}, ExplicitNode{20, false, false}};
  ok.edges = {ExplicitEdge{0, 1, 0, {}}, ExplicitEdge{1, 0, 1, {}}};
  SearchStats st1;
  auto r1 = resolve_blocked_scc(ok, success, 3, st1);
  REQUIRE(r1.has_value());
  CHECK(r1->first == Rule::zero_check_free);
  CHECK(r1->second.nodes.size() == 2);
  CHECK(st1.restarts == 1);

  // clock 1 is bounded on the 0->1 edge and reset nowhere: dropping that edge
  // leaves the accepting self-loop, which passes
  ExplicitGraphData blocked;
  blocked.nodes = {ExplicitNode{10, true, false}, ExplicitNode{20, false, false}};
  blocked.edges = {ExplicitEdge{0, 1, 0, bounded_on(1)}, ExplicitEdge{1, 0, 1, {}},
                   ExplicitEdge{0, 0, 2, {}}};
  SearchStats st2;
  auto r2 = resolve_blocked_scc(blocked, success, 3, st2);
  REQUIRE(r2.has_value());
  CHECK(r2->first == Rule::zero_check_free);
  REQUIRE(r2->second.nodes.size() == 1);
  CHECK(r2->second.nodes[0].orig == 10);
  REQUIRE(r2->second.edges.size() == 1);
  CHECK(r2->second.edges[0].transition == 2);
  CHECK(st2.restarts == 2);

  // with no recursion budget the same input stays undecided
  SearchStats st3;
  CHECK_FALSE(resolve_blocked_scc(blocked, success, 0, st3).has_value());
  CHECK(st3.restarts == 1);

  // every edge bounds the unresettable clock: nothing survives
  ExplicitGraphData hopeless;
  hopeless.nodes = {ExplicitNode{10, true, false}, ExplicitNode{20, false, false}};
  hopeless.edges = {ExplicitEdge{0, 1, 0, bounded_on(1)}, ExplicitEdge{1, 0, 1, bounded_on(1)}};
  SearchStats st4;
  CHECK_FALSE(resolve_blocked_scc(hopeless, success, 3, st4).has_value());
}

TEST_CASE("checker verdicts and search effort on the fixtures") {
  const Tba a1 = fixture_a1();
  const Tba a2 = fixture_a2();
  const Tba a3 = fixture_a3();

  const CheckResult o1 = check_optimized(a1);
  REQUIRE_FALSE(o1.verdict.is_empty);
  CHECK(o1.verdict.rule == Rule::lower_bound);
  CHECK(o1.stats.gzg_nodes_expanded == 0);  // never leaves the plain zone graph
  CHECK(o1.stats.nodes_stored == 2);

  const CheckResult g1 = check_gzg(a1);
  REQUIRE_FALSE(g1.verdict.is_empty);
  CHECK(g1.verdict.rule == Rule::gzg_clear);
  CHECK(g1.stats.nodes_stored == 4);

  const CheckResult s1 = check_snz(a1);
  REQUIRE_FALSE(s1.verdict.is_empty);
  CHECK(s1.verdict.rule == Rule::snz);
  CHECK(s1.stats.nodes_stored == 4);

  const CheckResult o2 = check_optimized(a2);
  CHECK(o2.verdict.is_empty);
  CHECK_FALSE(o2.verdict.rule.has_value());
  CHECK_FALSE(o2.verdict.witness.has_value());
  // zero-checks force the restricted guessing-graph fallback: 3 zone-graph
  // nodes plus all 8 guessing nodes
  CHECK(o2.stats.gzg_nodes_expanded == 8);
  CHECK(o2.stats.nodes_stored == 11);
  CHECK(check_gzg(a2).verdict.is_empty);
  CHECK(check_snz(a2).verdict.is_empty);

  const CheckResult o3 = check_optimized(a3);
  REQUIRE_FALSE(o3.verdict.is_empty);
  CHECK(o3.verdict.rule == Rule::gzg_clear);
  CHECK(o3.stats.gzg_nodes_expanded == 9);
  CHECK(o3.stats.nodes_stored == 14);
  CHECK(check_gzg(a3).verdict.rule == Rule::gzg_clear);
  CHECK(check_snz(a3).verdict.rule == Rule::snz);
}

TEST_CASE("node caps propagate out of the checkers") {
  const Tba a = gen_an(3, 1);
  CHECK_THROWS_AS((void)check_snz(a, 3), MaxNodesExceeded);
  CHECK_THROWS_AS((void)check_gzg(a, 3), MaxNodesExceeded);
  CHECK_THROWS_AS((void)check_optimized(a, 3), MaxNodesExceeded);
}
