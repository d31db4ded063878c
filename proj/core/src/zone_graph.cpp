#include "tbuchi/zone_graph.hpp"

namespace tbuchi {

ZgNode zg_initial(const Tba& a, int M) {
  return ZgNode{a.init(), approx_m(Zone::origin(a.clock_count() + 1), M)};
}

std::vector<std::pair<unsigned, ZgNode>> zg_successors(const Tba& a, const ZgNode& n, int M) {
  std::vector<std::pair<unsigned, ZgNode>> out;
  const Zone elapsed = up(n.zone);
  for (unsigned ti : a.outgoing(n.state)) {
    const Transition& t = a.transition(ti);
    auto crossing = and_guard(elapsed, t.guard);
    if (!crossing) continue;
    out.emplace_back(ti, ZgNode{t.dst, approx_m(reset(*crossing, t.reset), M)});
  }
  return out;
}

GzgNode gzg_initial(const Tba& a, int M) {
  ZgNode zg = zg_initial(a, M);
  return GzgNode{zg.state, zg.zone, a.all_clocks()};
}

std::vector<GzgEdge> gzg_successors(const Tba& a, const GzgNode& n, int M) {
  std::vector<GzgEdge> out;
  const Zone elapsed = up(n.zone);
  const ClockSet unguessed = a.all_clocks().minus(n.guess);
  for (unsigned ti : a.outgoing(n.state)) {
    const Transition& t = a.transition(ti);
    auto crossing = and_guard(elapsed, t.guard);
    if (!crossing) continue;
    // Fireable under the hypothesis that every unguessed clock is positive.
    if (!and_positive(*crossing, unguessed)) continue;
    GzgEdge e;
    e.transition = static_cast<int>(ti);
    e.target = GzgNode{t.dst, approx_m(reset(*crossing, t.reset), M), n.guess | t.reset};
    e.profile = profile_of(*crossing, t.reset);
    out.push_back(std::move(e));
  }
  if (n.guess.any()) {
    GzgEdge tau;
    tau.transition = -1;
    tau.target = GzgNode{n.state, n.zone, ClockSet{}};
    tau.profile.is_tau = true;
    out.push_back(std::move(tau));
  }
  return out;
}

ZoneGraphExplorer::ZoneGraphExplorer(const Tba& a, std::size_t max_nodes)
    : a_(a), m_(a.max_constant()), max_nodes_(max_nodes) {}

NodeId ZoneGraphExplorer::intern(ZgNode n) {
  auto it = index_.find(n);
  if (it != index_.end()) return it->second;
  if (max_nodes_ && nodes_.size() >= max_nodes_) throw MaxNodesExceeded(max_nodes_);
  NodeId id = static_cast<NodeId>(nodes_.size());
  index_.emplace(n, id);
  nodes_.push_back(std::move(n));
  succ_.emplace_back();
  return id;
}

NodeId ZoneGraphExplorer::initial() { return intern(zg_initial(a_, m_)); }

const std::vector<OutEdge>& ZoneGraphExplorer::successors(NodeId n) {
  if (!succ_[n]) {
    ++expanded_;
    auto edges = std::make_unique<std::vector<OutEdge>>();
    const Zone elapsed = up(nodes_[n].zone);
    for (unsigned ti : a_.outgoing(nodes_[n].state)) {
      const Transition& t = a_.transition(ti);
      auto crossing = and_guard(elapsed, t.guard);
      if (!crossing) continue;
      ZgNode target{t.dst, approx_m(reset(*crossing, t.reset), m_)};
      edges->push_back(OutEdge{intern(std::move(target)), static_cast<int>(ti),
                               profile_of(*crossing, t.reset)});
    }
    succ_[n] = std::move(edges);
  }
  return *succ_[n];
}

bool ZoneGraphExplorer::accepting(NodeId n) const { return a_.accepting(nodes_[n].state); }

GzgExplorer::GzgExplorer(const Tba& a, std::size_t max_nodes)
    : a_(a), m_(a.max_constant()), max_nodes_(max_nodes) {}

NodeId GzgExplorer::intern(GzgNode n) {
  auto it = index_.find(n);
  if (it != index_.end()) return it->second;
  if (max_nodes_ && nodes_.size() >= max_nodes_) throw MaxNodesExceeded(max_nodes_);
  NodeId id = static_cast<NodeId>(nodes_.size());
  index_.emplace(n, id);
  nodes_.push_back(std::move(n));
  succ_.emplace_back();
  return id;
}

NodeId GzgExplorer::initial() { return intern(gzg_initial(a_, m_)); }

const std::vector<OutEdge>& GzgExplorer::successors(NodeId n) {
  if (!succ_[n]) {
    ++expanded_;
    auto edges = std::make_unique<std::vector<OutEdge>>();
    for (GzgEdge& e : gzg_successors(a_, nodes_[n], m_))
      edges->push_back(OutEdge{intern(std::move(e.target)), e.transition, e.profile});
    succ_[n] = std::move(edges);
  }
  return *succ_[n];
}

bool GzgExplorer::accepting(NodeId n) const { return a_.accepting(nodes_[n].state); }

RestrictedGzgExplorer::RestrictedGzgExplorer(const Tba& a, GzgNode root,
                                             std::vector<ZgNode> members, std::size_t max_nodes)
    : a_(a), m_(a.max_constant()), max_nodes_(max_nodes), root_(std::move(root)) {
  for (ZgNode& m : members) members_.insert(std::move(m));
  if (!members_.count(ZgNode{root_.state, root_.zone}))
    throw std::invalid_argument("restricted exploration root lies outside the member set");
}

NodeId RestrictedGzgExplorer::intern(GzgNode n) {
  auto it = index_.find(n);
  if (it != index_.end()) return it->second;
  if (max_nodes_ && nodes_.size() >= max_nodes_) throw MaxNodesExceeded(max_nodes_);
  NodeId id = static_cast<NodeId>(nodes_.size());
  index_.emplace(n, id);
  nodes_.push_back(std::move(n));
  succ_.emplace_back();
  return id;
}

NodeId RestrictedGzgExplorer::initial() { return intern(root_); }

const std::vector<OutEdge>& RestrictedGzgExplorer::successors(NodeId n) {
  if (!succ_[n]) {
    ++expanded_;
    auto edges = std::make_unique<std::vector<OutEdge>>();
    for (GzgEdge& e : gzg_successors(a_, nodes_[n], m_)) {
      if (e.transition >= 0 &&
          !members_.count(ZgNode{e.target.state, e.target.zone}))
        continue;
      edges->push_back(OutEdge{intern(std::move(e.target)), e.transition, e.profile});
    }
    succ_[n] = std::move(edges);
  }
  return *succ_[n];
}

bool RestrictedGzgExplorer::accepting(NodeId n) const { return a_.accepting(nodes_[n].state); }

}  // namespace tbuchi
