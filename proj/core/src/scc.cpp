#include "tbuchi/scc.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace tbuchi {

void SccSummary::add_node(bool accepting, bool clear) {
  accepting_seen |= accepting;
  clear_seen |= clear;
}

void SccSummary::add_profile(const EdgeProfile& p) {
  if (p.is_tau) return;
  zero_check_seen |= p.zero_checked.any();
  bounded |= p.bounded;
  resets |= p.reset;
  lower1 |= p.lower1;
}

void SccSummary::merge(const SccSummary& o) {
  accepting_seen |= o.accepting_seen;
  clear_seen |= o.clear_seen;
  zero_check_seen |= o.zero_check_seen;
  bounded |= o.bounded;
  resets |= o.resets;
  lower1 |= o.lower1;
}

CouvreurEngine::CouvreurEngine(SymbolicGraph& graph, SuccessFn success, OnSuccessFn on_success,
                               OnMaximalFn on_maximal)
    : graph_(graph),
      success_(std::move(success)),
      on_success_(std::move(on_success)),
      on_maximal_(std::move(on_maximal)) {}

CouvreurEngine::NodeState& CouvreurEngine::state(NodeId n) {
  if (states_.size() <= n) states_.resize(n + 1);
  return states_[n];
}

void CouvreurEngine::push_node(NodeId n, const EdgeProfile* pending, NodeId parent,
                               int transition) {
  NodeState& s = state(n);
  s.visited = true;
  s.live = true;
  s.index = next_index_++;
  if (pending) {
    s.has_parent = true;
    s.parent = parent;
    s.parent_transition = transition;
  }
  RootEntry r;
  r.node = n;
  r.index = s.index;
  r.stack_pos = live_stack_.size();
  r.summary.add_node(graph_.accepting(n), graph_.clear_node(n));
  r.has_pending = pending != nullptr;
  if (pending) r.pending = *pending;
  roots_.push_back(std::move(r));
  live_stack_.push_back(n);
  dfs_stack_.push_back(n);
}

std::optional<Rule> CouvreurEngine::merge_into(NodeId target, const EdgeProfile& closing) {
  const unsigned target_index = states_[target].index;
  while (roots_.back().index > target_index) {
    RootEntry popped = std::move(roots_.back());
    roots_.pop_back();
    assert(!roots_.empty());
    RootEntry& below = roots_.back();
    below.summary.merge(popped.summary);
    if (popped.has_pending) below.summary.add_profile(popped.pending);
  }
  roots_.back().summary.add_profile(closing);
  return success_(roots_.back().summary);
}

MaximalScc CouvreurEngine::snapshot_scc(std::size_t roots_from) const {
  const RootEntry& root = roots_[roots_from];
  MaximalScc scc;
  scc.root = root.node;
  scc.summary = root.summary;
  scc.members.assign(live_stack_.begin() + static_cast<long>(root.stack_pos), live_stack_.end());
  for (NodeId u : scc.members) {
    const NodeState& su = states_[u];
    if (su.cursor == 0) continue;
    const auto& succ = graph_.successors(u);  // cache hit: u was expanded before
    for (unsigned k = 0; k < su.cursor; ++k) {
      const OutEdge& e = succ[k];
      const NodeState& sv = states_[e.target];
      if (sv.live && sv.index >= root.index)
        scc.edges.push_back(ExplicitEdge{u, e.target, e.transition, e.profile});
    }
  }
  return scc;
}

std::optional<SccHit> CouvreurEngine::run(SearchStats& stats) {
  std::optional<SccHit> hit;
  auto sync = [&] {
    stats.nodes_visited += graph_.expanded();
    stats.nodes_stored += graph_.stored();
    stats.edges_traversed += edges_traversed_;
    stats.scc_count += scc_count_;
  };
  try {
    push_node(graph_.initial(), nullptr, 0, -1);
    while (!dfs_stack_.empty() && !hit) {
      const NodeId u = dfs_stack_.back();
      const auto& succ = graph_.successors(u);
      const unsigned cursor = states_[u].cursor;
      if (cursor < succ.size()) {
        states_[u].cursor = cursor + 1;
        const OutEdge e = succ[cursor];
        ++edges_traversed_;
        const NodeState& sv = state(e.target);
        if (!sv.visited) {
          push_node(e.target, &e.profile, u, e.transition);
        } else if (sv.live) {
          if (auto rule = merge_into(e.target, e.profile))
            hit = on_success_(snapshot_scc(roots_.size() - 1), *rule, *this);
        }
        continue;
      }
      dfs_stack_.pop_back();
      if (roots_.back().node != u) continue;
      MaximalScc scc = snapshot_scc(roots_.size() - 1);
      ++scc_count_;
      for (std::size_t i = roots_.back().stack_pos; i < live_stack_.size(); ++i)
        states_[live_stack_[i]].live = false;
      live_stack_.resize(roots_.back().stack_pos);
      roots_.pop_back();
      const bool trivial = scc.members.size() == 1 && scc.edges.empty();
      if (!trivial) hit = on_maximal_(scc, *this);
    }
  } catch (...) {
    sync();
    throw;
  }
  sync();
  return hit;
}

CouvreurEngine::Path CouvreurEngine::path_from_initial(NodeId target) const {
  Path path;
  NodeId n = target;
  while (true) {
    path.nodes.push_back(n);
    const NodeState& s = states_[n];
    if (!s.has_parent) break;
    path.transitions.push_back(s.parent_transition);
    n = s.parent;
  }
  std::reverse(path.nodes.begin(), path.nodes.end());
  std::reverse(path.transitions.begin(), path.transitions.end());
  return path;
}

unsigned CouvreurEngine::traversed_count(NodeId n) const {
  if (n >= states_.size() || !states_[n].visited) return 0;
  return states_[n].cursor;
}

std::vector<std::vector<unsigned>> explicit_sccs(const ExplicitGraphData& data) {
  const std::size_t n = data.nodes.size();
  std::vector<std::vector<unsigned>> adj(n);
  for (const ExplicitEdge& e : data.edges) adj[e.src].push_back(e.dst);

  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<unsigned> stack;
  std::vector<std::vector<unsigned>> sccs;
  struct Frame {
    unsigned v;
    std::size_t ei;
  };
  int next = 0;
  for (unsigned start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.ei < adj[f.v].size()) {
        const unsigned w = adj[f.v][f.ei++];
        if (index[w] == -1) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back(Frame{w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          sccs.emplace_back();
          unsigned w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            sccs.back().push_back(w);
          } while (w != f.v);
        }
        const unsigned v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return sccs;
}

ExplicitGraphData freeze_scc(SymbolicGraph& g, const MaximalScc& scc) {
  ExplicitGraphData data;
  std::unordered_map<NodeId, unsigned> local;
  data.nodes.reserve(scc.members.size());
  for (NodeId m : scc.members) {
    local.emplace(m, static_cast<unsigned>(data.nodes.size()));
    data.nodes.push_back(ExplicitNode{m, g.accepting(m), g.clear_node(m)});
  }
  for (const ExplicitEdge& e : scc.edges)
    data.edges.push_back(ExplicitEdge{local.at(e.src), local.at(e.dst), e.transition, e.profile});
  return data;
}

std::optional<std::pair<Rule, ExplicitGraphData>> resolve_blocked_scc(
    const ExplicitGraphData& scc, const SuccessFn& success, unsigned depth, SearchStats& stats) {
  ++stats.restarts;
  SccSummary summary;
  for (const ExplicitNode& n : scc.nodes) summary.add_node(n.accepting, n.clear);
  for (const ExplicitEdge& e : scc.edges) summary.add_profile(e.profile);
  if (auto rule = success(summary)) return std::make_pair(*rule, scc);

  // Clocks bounded somewhere in the SCC but reset nowhere inside it grow
  // beyond every bound on a time-diverging run, so the edges bounding them
  // must eventually stop being taken.
  const ClockSet blocking = summary.bounded.minus(summary.resets);
  if (blocking.empty() || depth == 0) return std::nullopt;

  ExplicitGraphData filtered;
  filtered.nodes = scc.nodes;
  for (const ExplicitEdge& e : scc.edges)
    if (!e.profile.bounded.intersects(blocking)) filtered.edges.push_back(e);

  for (const auto& component : explicit_sccs(filtered)) {
    std::vector<int> local(filtered.nodes.size(), -1);
    for (std::size_t i = 0; i < component.size(); ++i) local[component[i]] = static_cast<int>(i);
    ExplicitGraphData sub;
    for (unsigned v : component) sub.nodes.push_back(filtered.nodes[v]);
    for (const ExplicitEdge& e : filtered.edges)
      if (local[e.src] >= 0 && local[e.dst] >= 0)
        sub.edges.push_back(ExplicitEdge{static_cast<unsigned>(local[e.src]),
                                         static_cast<unsigned>(local[e.dst]), e.transition,
                                         e.profile});
    if (sub.nodes.size() == 1 && sub.edges.empty()) continue;  // trivial
    if (auto r = resolve_blocked_scc(sub, success, depth - 1, stats)) return r;
  }
  return std::nullopt;
}

}  // namespace tbuchi
