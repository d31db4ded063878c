#include "tbuchi/checker.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tbuchi {

const char* rule_text(Rule r) {
  switch (r) {
    case Rule::snz: return "snz";
    case Rule::gzg_clear: return "gzg_clear";
    case Rule::zero_check_free: return "zero_check_free";
    case Rule::lower_bound: return "lower_bound";
  }
  return "?";
}

const char* graph_kind_text(GraphKind k) {
  switch (k) {
    case GraphKind::zg: return "zg";
    case GraphKind::gzg: return "gzg";
    case GraphKind::zg_snz: return "zg_snz";
  }
  return "?";
}

namespace {

LassoNode make_node(SymbolicGraph& g, const Tba& replay, NodeId n) {
  LassoNode node;
  node.state = g.node_state(n);
  node.zone = g.node_zone(n);
  node.guess = g.node_guess(n);
  node.state_name = replay.state_name(node.state);
  return node;
}

/// Walks cycles inside one SCC along its usable edges.
class SccWalker {
 public:
  SccWalker(const std::vector<NodeId>& members, const std::vector<ExplicitEdge>& edges,
            NodeId start)
      : edges_(edges), at_(start) {
    for (NodeId m : members) adj_[m];  // ensure every member has an entry
    for (std::size_t i = 0; i < edges.size(); ++i) adj_[edges[i].src].push_back(i);
    nodes_.push_back(start);
  }

  NodeId at() const { return at_; }
  bool moved() const { return !transitions_.empty(); }

  /// Shortest-path BFS to the closest node satisfying the goal and appends it.
  template <typename NodeGoal>
  void reach_node(NodeGoal goal) {
    if (goal(at_)) return;
    walk(bfs([&](NodeId n, const ExplicitEdge*) { return goal(n); }));
  }

  /// Reaches and traverses the closest edge satisfying the goal.
  template <typename EdgeGoal>
  void traverse_edge(EdgeGoal goal) {
    walk(bfs([&](NodeId, const ExplicitEdge* e) { return e && goal(*e); }));
  }

  /// Takes one arbitrary edge (used to forbid empty cycles).
  void step_anywhere() {
    if (adj_.at(at_).empty()) throw std::logic_error("SCC node without a usable edge");
    walk({adj_.at(at_).front()});
  }

  void close(NodeId start) {
    reach_node([start](NodeId n) { return n == start; });
    nodes_.pop_back();  // the closing node is cycle_nodes.front()
  }

  std::vector<NodeId> nodes_;
  std::vector<int> transitions_;

 private:
  /// BFS from at_ over usable edges. The predicate sees each dequeued node
  /// (with null edge) and each outgoing edge; returns the edge sequence to
  /// (and including, for edge goals) the first match.
  template <typename Pred>
  std::vector<std::size_t> bfs(Pred pred) {
    std::unordered_map<NodeId, std::size_t> via;  // node -> edge that reached it
    std::unordered_set<NodeId> seen{at_};
    std::deque<NodeId> queue{at_};
    auto path_to = [&](NodeId n, std::optional<std::size_t> last) {
      std::vector<std::size_t> path;
      if (last) path.push_back(*last);
      while (n != at_) {
        const std::size_t e = via.at(n);
        path.push_back(e);
        n = edges_[e].src;
      }
      std::reverse(path.begin(), path.end());
      return path;
    };
    while (!queue.empty()) {
      const NodeId n = queue.front();
      queue.pop_front();
      if (pred(n, nullptr)) return path_to(n, std::nullopt);
      for (std::size_t ei : adj_.at(n)) {
        const ExplicitEdge& e = edges_[ei];
        if (pred(n, &e)) return path_to(n, ei);
        if (seen.insert(e.dst).second) {
          via.emplace(e.dst, ei);
          queue.push_back(e.dst);
        }
      }
    }
    throw std::logic_error("SCC walk goal unreachable");
  }

  void walk(const std::vector<std::size_t>& path) {
    for (std::size_t ei : path) {
      const ExplicitEdge& e = edges_[ei];
      if (e.src != at_) throw std::logic_error("SCC walk path is disconnected");
      transitions_.push_back(e.transition);
      nodes_.push_back(e.dst);
      at_ = e.dst;
    }
  }

  const std::vector<ExplicitEdge>& edges_;
  std::unordered_map<NodeId, std::vector<std::size_t>> adj_;
  NodeId at_;
};

}  // namespace

Lasso build_lasso(SymbolicGraph& g, const CouvreurEngine& eng, Rule rule, GraphKind kind,
                  const Tba& replay, const std::vector<NodeId>& members,
                  const std::vector<ExplicitEdge>& edges, const SccSummary& summary) {
  if (members.empty()) throw std::logic_error("lasso over an empty SCC");
  const NodeId start = members.front();
  SccWalker walker(members, edges, start);

  walker.reach_node([&g](NodeId n) { return g.accepting(n); });
  if (rule == Rule::gzg_clear)
    walker.reach_node([&g](NodeId n) { return g.clear_node(n); });
  if (rule == Rule::gzg_clear || rule == Rule::zero_check_free) {
    summary.bounded.for_each([&walker](ClockId x) {
      walker.traverse_edge([x](const ExplicitEdge& e) { return e.profile.reset.contains(x); });
    });
  }
  if (rule == Rule::lower_bound) {
    ClockSet common = summary.lower1 & summary.resets;
    if (common.empty()) throw std::logic_error("lower_bound rule without a qualifying clock");
    ClockId x = 0;
    common.for_each([&x](ClockId c) {
      if (!x) x = c;
    });
    walker.traverse_edge([x](const ExplicitEdge& e) { return e.profile.lower1.contains(x); });
    walker.traverse_edge([x](const ExplicitEdge& e) { return e.profile.reset.contains(x); });
  }
  if (!walker.moved()) walker.step_anywhere();
  walker.close(start);

  Lasso lasso;
  lasso.graph = kind;
  const CouvreurEngine::Path stem = eng.path_from_initial(start);
  for (NodeId n : stem.nodes) lasso.stem_nodes.push_back(make_node(g, replay, n));
  lasso.stem_transitions = stem.transitions;
  for (NodeId n : walker.nodes_) lasso.cycle_nodes.push_back(make_node(g, replay, n));
  lasso.cycle_transitions = walker.transitions_;
  return lasso;
}

Lasso build_lasso_from_scc(SymbolicGraph& g, const CouvreurEngine& eng, Rule rule, GraphKind kind,
                           const Tba& replay, const MaximalScc& scc) {
  return build_lasso(g, eng, rule, kind, replay, scc.members, scc.edges, scc.summary);
}

Lasso build_lasso_from_explicit(SymbolicGraph& g, const CouvreurEngine& eng, Rule rule,
                                GraphKind kind, const Tba& replay,
                                const ExplicitGraphData& surviving) {
  std::vector<NodeId> members;
  for (const ExplicitNode& n : surviving.nodes) members.push_back(n.orig);
  std::vector<ExplicitEdge> edges;
  SccSummary summary;
  for (const ExplicitNode& n : surviving.nodes) summary.add_node(n.accepting, n.clear);
  for (const ExplicitEdge& e : surviving.edges) {
    summary.add_profile(e.profile);
    edges.push_back(ExplicitEdge{surviving.nodes[e.src].orig, surviving.nodes[e.dst].orig,
                                 e.transition, e.profile});
  }
  return build_lasso(g, eng, rule, kind, replay, members, edges, summary);
}

namespace {

bool same_node(const LassoNode& a, const LassoNode& b) {
  return a.state == b.state && a.zone == b.zone && a.guess == b.guess;
}

}  // namespace

std::optional<std::string> validate_witness(const Tba& a, const Lasso& l, Rule rule) {
  Tba snz_store;
  const Tba* replay = &a;
  if (l.graph == GraphKind::zg_snz) {
    snz_store = snz_transform(a);
    replay = &snz_store;
  }
  const int M = replay->max_constant();
  const bool gzg = l.graph == GraphKind::gzg;

  if (rule == Rule::snz && l.graph != GraphKind::zg_snz) return "snz rule needs a zg_snz lasso";
  if (rule == Rule::gzg_clear && !gzg) return "gzg_clear rule needs a gzg lasso";

  if (l.stem_nodes.empty()) return "stem is empty";
  if (l.stem_transitions.size() + 1 != l.stem_nodes.size()) return "stem arity mismatch";
  if (l.cycle_nodes.empty()) return "cycle is empty";
  if (l.cycle_transitions.size() != l.cycle_nodes.size()) return "cycle arity mismatch";
  if (l.cycle_transitions.empty()) return "cycle has no edge";
  if (!same_node(l.stem_nodes.back(), l.cycle_nodes.front()))
    return "stem does not end at the cycle entry";

  {
    const LassoNode& first = l.stem_nodes.front();
    const ZgNode ini = zg_initial(*replay, M);
    if (first.state != ini.state || !(first.zone == ini.zone))
      return "stem does not start at the initial node";
    if (gzg) {
      if (first.guess != std::optional<ClockSet>(replay->all_clocks()))
        return "initial guess must contain every clock";
    } else if (first.guess) {
      return "unexpected guess on a plain zone-graph lasso";
    }
  }

  ClockSet cycle_bounded, cycle_resets, cycle_lower1;
  bool cycle_zero_check = false;

  auto step = [&](const LassoNode& from, const LassoNode& to, int t,
                  bool on_cycle) -> std::optional<std::string> {
    if (t < 0) {
      if (!gzg) return "tau edge outside a guessing-zone-graph lasso";
      if (!from.guess || from.guess->empty()) return "tau edge needs a nonempty guess";
      if (to.state != from.state || !(to.zone == from.zone)) return "tau edge changes the node";
      if (!to.guess || to.guess->any()) return "tau edge must empty the guess";
      return std::nullopt;
    }
    if (static_cast<unsigned>(t) >= replay->transition_count()) return "bad transition index";
    const Transition& tr = replay->transition(static_cast<unsigned>(t));
    if (tr.src != from.state) return "transition does not leave the node's state";
    if (tr.dst != to.state) return "transition does not enter the next state";
    auto crossing = and_guard(up(from.zone), tr.guard);
    if (!crossing) return "transition is not fireable from the zone";
    if (gzg) {
      if (!from.guess || !to.guess) return "guessing-zone-graph lasso without guesses";
      if (!and_positive(*crossing, replay->all_clocks().minus(*from.guess)))
        return "transition is not fireable when unguessed clocks are positive";
      if (*to.guess != (*from.guess | tr.reset)) return "guess must grow by the reset set";
    }
    const Zone target = approx_m(reset(*crossing, tr.reset), M);
    if (!(target == to.zone)) return "successor zone mismatch";
    if (on_cycle) {
      const EdgeProfile p = profile_of(*crossing, tr.reset);
      cycle_bounded |= p.bounded;
      cycle_resets |= p.reset;
      cycle_lower1 |= p.lower1;
      cycle_zero_check |= p.zero_checked.any();
    }
    return std::nullopt;
  };

  for (const auto& nodes : {l.stem_nodes, l.cycle_nodes})
    for (const LassoNode& n : nodes)
      if (n.state >= replay->state_count() || n.state_name != replay->state_name(n.state))
        return "node state name mismatch";

  for (std::size_t i = 0; i < l.stem_transitions.size(); ++i)
    if (auto err = step(l.stem_nodes[i], l.stem_nodes[i + 1], l.stem_transitions[i], false))
      return err;
  for (std::size_t i = 0; i < l.cycle_transitions.size(); ++i) {
    const LassoNode& to = l.cycle_nodes[(i + 1) % l.cycle_nodes.size()];
    if (auto err = step(l.cycle_nodes[i], to, l.cycle_transitions[i], true)) return err;
  }

  bool has_accepting = false, has_clear = false;
  for (const LassoNode& n : l.cycle_nodes) {
    has_accepting |= replay->accepting(n.state);
    has_clear |= n.guess && n.guess->empty();
  }
  if (!has_accepting) return "no accepting state on the cycle";

  switch (rule) {
    case Rule::snz:
      break;
    case Rule::gzg_clear:
      if (!has_clear) return "no clear node on the cycle";
      if (!cycle_bounded.subset_of(cycle_resets)) return "bounded cycle clock never reset";
      break;
    case Rule::zero_check_free:
      if (cycle_zero_check) return "zero-check on a zero_check_free cycle";
      if (!cycle_bounded.subset_of(cycle_resets)) return "bounded cycle clock never reset";
      break;
    case Rule::lower_bound:
      if (!cycle_lower1.intersects(cycle_resets))
        return "no clock both held >= 1 and reset on the cycle";
      break;
  }
  return std::nullopt;
}

}  // namespace tbuchi
