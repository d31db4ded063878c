#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tbuchi/witness.hpp"
#include "tbuchi/zone_graph.hpp"

namespace tbuchi {

/// Aggregate facts about an SCC: node flags plus the fold of the profiles of
/// its (traversed) internal edges. Merging is associative and commutative.
struct SccSummary {
  bool accepting_seen = false;
  bool clear_seen = false;
  bool zero_check_seen = false;
  ClockSet bounded;  ///< clocks bounded on some edge
  ClockSet resets;   ///< clocks reset on some edge
  ClockSet lower1;   ///< clocks held >= 1 on some edge

  void add_node(bool accepting, bool clear);
  void add_profile(const EdgeProfile& p);
  void merge(const SccSummary& o);

  bool operator==(const SccSummary&) const = default;
};

struct SearchStats {
  std::size_t nodes_visited = 0;   ///< nodes expanded (successor lists computed)
  std::size_t nodes_stored = 0;    ///< nodes interned
  std::size_t edges_traversed = 0;
  std::size_t scc_count = 0;           ///< maximal SCCs completed
  std::size_t restarts = 0;            ///< blocked-SCC re-examinations
  std::size_t gzg_nodes_expanded = 0;  ///< guessing-zone-graph share of the expansions
};

/// An edge between graph nodes (or, inside ExplicitGraphData, between
/// positions of its node vector).
struct ExplicitEdge {
  unsigned src = 0;
  unsigned dst = 0;
  int transition = -1;
  EdgeProfile profile;
};

struct ExplicitNode {
  NodeId orig = 0;  ///< node of the graph this was lifted from
  bool accepting = false;
  bool clear = false;
};

/// A frozen subgraph, self-contained for re-examination after edge removals.
struct ExplicitGraphData {
  std::vector<ExplicitNode> nodes;
  std::vector<ExplicitEdge> edges;  ///< src/dst index into nodes
};

/// A completed SCC handed to callbacks: members and the traversed edges
/// among them (src/dst are graph node ids). The summary folds exactly these
/// nodes and edges.
struct MaximalScc {
  std::vector<NodeId> members;
  std::vector<ExplicitEdge> edges;
  SccSummary summary;
  NodeId root = 0;
};

class CouvreurEngine;

/// Decides whether a (partial) SCC summary proves non-emptiness.
using SuccessFn = std::function<std::optional<Rule>(const SccSummary&)>;

/// Outcome a callback reports to stop the search: deciding rule plus the
/// witnessing SCC. Callbacks that analyze a short-lived auxiliary graph must
/// attach a ready-made lasso; otherwise one is built from the SCC afterwards.
struct SccHit {
  Rule rule;
  MaximalScc scc;
  std::optional<Lasso> lasso;
};

/// Called when a merge makes the success predicate true; builds the hit.
using OnSuccessFn = std::function<SccHit(const MaximalScc&, Rule, CouvreurEngine&)>;

/// Called on every completed nontrivial maximal SCC (these never satisfy the
/// success predicate; a satisfying summary would have stopped at a merge).
/// May run a deeper analysis and report a hit, or return nullopt to go on.
using OnMaximalFn = std::function<std::optional<SccHit>(const MaximalScc&, CouvreurEngine&)>;

/// On-the-fly emptiness search: a single depth-first traversal maintaining
/// candidate SCCs as a stack of roots with partial summaries. Closing edges
/// merge roots and immediately re-test the success predicate, so a verdict
/// fires as early as possible; completed maximal SCCs that still fail the
/// predicate are offered to on_maximal for re-examination.
class CouvreurEngine {
 public:
  CouvreurEngine(SymbolicGraph& graph, SuccessFn success, OnSuccessFn on_success,
                 OnMaximalFn on_maximal);

  std::optional<SccHit> run(SearchStats& stats);

  /// DFS-tree path from the initial node; transitions[i] leads into nodes[i+1].
  struct Path {
    std::vector<NodeId> nodes;
    std::vector<int> transitions;
  };
  Path path_from_initial(NodeId target) const;

  /// Number of successor edges of n the DFS has consumed so far.
  unsigned traversed_count(NodeId n) const;

  SymbolicGraph& graph() { return graph_; }

 private:
  struct RootEntry {
    NodeId node;
    unsigned index;
    std::size_t stack_pos;
    SccSummary summary;
    EdgeProfile pending;  ///< profile of the tree edge that reached this root
    bool has_pending;
  };

  struct NodeState {
    unsigned index = 0;
    bool visited = false;
    bool live = false;
    NodeId parent = 0;
    int parent_transition = -1;
    bool has_parent = false;
    unsigned cursor = 0;  ///< next successor edge to traverse
  };

  NodeState& state(NodeId n);
  void push_node(NodeId n, const EdgeProfile* pending, NodeId parent, int transition);
  std::optional<Rule> merge_into(NodeId target, const EdgeProfile& closing);
  MaximalScc snapshot_scc(std::size_t roots_from) const;

  SymbolicGraph& graph_;
  SuccessFn success_;
  OnSuccessFn on_success_;
  OnMaximalFn on_maximal_;

  std::vector<NodeState> states_;
  std::vector<NodeId> live_stack_;
  std::vector<RootEntry> roots_;
  std::vector<NodeId> dfs_stack_;
  unsigned next_index_ = 0;
  std::size_t edges_traversed_ = 0;
  std::size_t scc_count_ = 0;
};

/// Re-examines a blocked SCC. A clock bounded somewhere in the SCC but never
/// reset inside it cannot stay bounded forever on a time-diverging run, so
/// edges bounding such clocks are removed and the surviving sub-SCCs are
/// checked recursively (depth decreasing each level). Returns the deciding
/// rule and the surviving strongly connected subgraph, or nullopt.
std::optional<std::pair<Rule, ExplicitGraphData>> resolve_blocked_scc(
    const ExplicitGraphData& scc, const SuccessFn& success, unsigned depth, SearchStats& stats);

/// Maximal SCCs of an explicit graph (Tarjan), as index lists into data.nodes,
/// in reverse topological completion order. Trivial SCCs are included.
std::vector<std::vector<unsigned>> explicit_sccs(const ExplicitGraphData& data);

/// Copies a completed SCC into a self-contained explicit graph (orig fields
/// keep the graph node ids).
ExplicitGraphData freeze_scc(SymbolicGraph& g, const MaximalScc& scc);

}  // namespace tbuchi
