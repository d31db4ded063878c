#pragma once

#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tbuchi/automaton.hpp"
#include "tbuchi/dbm.hpp"

namespace tbuchi {

/// Node of the zone graph: a location paired with an extrapolated zone.
struct ZgNode {
  unsigned state = 0;
  Zone zone = Zone::origin(1);

  bool operator==(const ZgNode& o) const { return state == o.state && zone == o.zone; }
};

struct ZgNodeHash {
  std::size_t operator()(const ZgNode& n) const { return n.zone.hash() * 31 + n.state; }
};

/// Node of the guessing zone graph. The guess Y over-approximates the clocks
/// that may still be checked for zero before being reset; time can provably
/// elapse in nodes with an empty guess.
struct GzgNode {
  unsigned state = 0;
  Zone zone = Zone::origin(1);
  ClockSet guess;

  bool operator==(const GzgNode& o) const {
    return state == o.state && guess == o.guess && zone == o.zone;
  }
};

struct GzgNodeHash {
  std::size_t operator()(const GzgNode& n) const {
    return (n.zone.hash() * 31 + n.state) * 31 + n.guess.raw();
  }
};

/// Initial zone-graph node: the origin point zone (extrapolated), no elapse.
ZgNode zg_initial(const Tba& a, int M);

/// Action successors in transition declaration order; the unsigned component
/// is the transition index.
std::vector<std::pair<unsigned, ZgNode>> zg_successors(const Tba& a, const ZgNode& n, int M);

struct GzgEdge {
  int transition = -1;  ///< index into the automaton; -1 for the tau edge
  GzgNode target;
  EdgeProfile profile;
};

/// Initial guessing-zone-graph node: initial zone with the full clock set.
GzgNode gzg_initial(const Tba& a, int M);

/// Action successors (declaration order), then - when the guess is nonempty -
/// the tau edge dropping the guess to the empty set. An action edge t exists
/// iff t is fireable under the extra hypothesis x > 0 for all unguessed x;
/// its target zone is the plain zone-graph successor and its guess grows by
/// the reset set. Tau self-loops at empty-guess nodes are omitted.
std::vector<GzgEdge> gzg_successors(const Tba& a, const GzgNode& n, int M);

/// Thrown when an exploration would intern more nodes than its cap.
class MaxNodesExceeded : public std::runtime_error {
 public:
  explicit MaxNodesExceeded(std::size_t cap)
      : std::runtime_error("exploration exceeded the node cap of " + std::to_string(cap)) {}
};

using NodeId = unsigned;

struct OutEdge {
  NodeId target = 0;
  int transition = -1;  ///< -1 for tau edges
  EdgeProfile profile;
};

/// On-the-fly symbolic graph with interned nodes and cached successor lists.
class SymbolicGraph {
 public:
  virtual ~SymbolicGraph() = default;

  virtual NodeId initial() = 0;
  /// First call for a node expands it (counted); later calls hit the cache.
  virtual const std::vector<OutEdge>& successors(NodeId n) = 0;
  virtual bool accepting(NodeId n) const = 0;
  /// True for guessing-zone-graph nodes with an empty guess; false on plain
  /// zone graphs.
  virtual bool clear_node(NodeId n) const = 0;
  virtual unsigned node_state(NodeId n) const = 0;
  virtual const Zone& node_zone(NodeId n) const = 0;
  virtual std::optional<ClockSet> node_guess(NodeId n) const = 0;
  virtual std::size_t stored() const = 0;
  virtual std::size_t expanded() const = 0;
};

class ZoneGraphExplorer : public SymbolicGraph {
 public:
  explicit ZoneGraphExplorer(const Tba& a, std::size_t max_nodes = 0);

  NodeId initial() override;
  const std::vector<OutEdge>& successors(NodeId n) override;
  bool accepting(NodeId n) const override;
  bool clear_node(NodeId) const override { return false; }
  unsigned node_state(NodeId n) const override { return nodes_[n].state; }
  const Zone& node_zone(NodeId n) const override { return nodes_[n].zone; }
  std::optional<ClockSet> node_guess(NodeId) const override { return std::nullopt; }
  std::size_t stored() const override { return nodes_.size(); }
  std::size_t expanded() const override { return expanded_; }

  const ZgNode& node(NodeId n) const { return nodes_[n]; }

 private:
  NodeId intern(ZgNode n);

  const Tba& a_;
  int m_;
  std::size_t max_nodes_;
  std::vector<ZgNode> nodes_;
  std::unordered_map<ZgNode, NodeId, ZgNodeHash> index_;
  std::vector<std::unique_ptr<std::vector<OutEdge>>> succ_;
  std::size_t expanded_ = 0;
};

class GzgExplorer : public SymbolicGraph {
 public:
  explicit GzgExplorer(const Tba& a, std::size_t max_nodes = 0);

  NodeId initial() override;
  const std::vector<OutEdge>& successors(NodeId n) override;
  bool accepting(NodeId n) const override;
  bool clear_node(NodeId n) const override { return nodes_[n].guess.empty(); }
  unsigned node_state(NodeId n) const override { return nodes_[n].state; }
  const Zone& node_zone(NodeId n) const override { return nodes_[n].zone; }
  std::optional<ClockSet> node_guess(NodeId n) const override { return nodes_[n].guess; }
  std::size_t stored() const override { return nodes_.size(); }
  std::size_t expanded() const override { return expanded_; }

  const GzgNode& node(NodeId n) const { return nodes_[n]; }

 private:
  NodeId intern(GzgNode n);

  const Tba& a_;
  int m_;
  std::size_t max_nodes_;
  std::vector<GzgNode> nodes_;
  std::unordered_map<GzgNode, NodeId, GzgNodeHash> index_;
  std::vector<std::unique_ptr<std::vector<OutEdge>>> succ_;
  std::size_t expanded_ = 0;
};

/// Guessing zone graph restricted to a set of zone-graph nodes: action edges
/// whose plain projection leaves the set are dropped; tau edges are kept.
/// The root must itself project into the set.
class RestrictedGzgExplorer : public SymbolicGraph {
 public:
  RestrictedGzgExplorer(const Tba& a, GzgNode root, std::vector<ZgNode> members,
                        std::size_t max_nodes = 0);

  NodeId initial() override;
  const std::vector<OutEdge>& successors(NodeId n) override;
  bool accepting(NodeId n) const override;
  bool clear_node(NodeId n) const override { return nodes_[n].guess.empty(); }
  unsigned node_state(NodeId n) const override { return nodes_[n].state; }
  const Zone& node_zone(NodeId n) const override { return nodes_[n].zone; }
  std::optional<ClockSet> node_guess(NodeId n) const override { return nodes_[n].guess; }
  std::size_t stored() const override { return nodes_.size(); }
  std::size_t expanded() const override { return expanded_; }

  const GzgNode& node(NodeId n) const { return nodes_[n]; }

 private:
  NodeId intern(GzgNode n);

  const Tba& a_;
  int m_;
  std::size_t max_nodes_;
  GzgNode root_;
  std::unordered_set<ZgNode, ZgNodeHash> members_;
  std::vector<GzgNode> nodes_;
  std::unordered_map<GzgNode, NodeId, GzgNodeHash> index_;
  std::vector<std::unique_ptr<std::vector<OutEdge>>> succ_;
  std::size_t expanded_ = 0;
};

}  // namespace tbuchi
