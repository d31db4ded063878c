#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tbuchi/dbm.hpp"

namespace tbuchi {

/// Why a non-emptiness verdict holds.
enum class Rule {
  snz,              ///< accepting cycle of a strongly-non-Zeno transform
  gzg_clear,        ///< guessing-zone-graph SCC with a clear node, bounded clocks reset
  zero_check_free,  ///< zero-check-free SCC whose bounded clocks are all reset
  lower_bound,      ///< a clock held >= 1 on some edge of the SCC and reset on another
};

const char* rule_text(Rule r);

/// Which symbolic graph a lasso lives in.
enum class GraphKind {
  zg,      ///< zone graph of the automaton itself
  gzg,     ///< guessing zone graph of the automaton
  zg_snz,  ///< zone graph of its strongly-non-Zeno transform
};

const char* graph_kind_text(GraphKind k);

struct LassoNode {
  unsigned state = 0;
  Zone zone = Zone::origin(1);
  /// Guess set on guessing-zone-graph lassos, empty otherwise.
  std::optional<ClockSet> guess;
  std::string state_name;
};

/// A non-emptiness witness: a path from the initial node to a cycle.
/// stem_nodes.front() is the graph's initial node and stem_nodes.back()
/// equals cycle_nodes.front(); cycle_transitions[i] leads from cycle node i
/// to cycle node i+1 (wrapping around). Transition -1 is the tau edge.
struct Lasso {
  GraphKind graph = GraphKind::zg;
  std::vector<LassoNode> stem_nodes;
  std::vector<int> stem_transitions;
  std::vector<LassoNode> cycle_nodes;
  std::vector<int> cycle_transitions;
};

/// Replays a lasso against the automaton with the plain zone operations and
/// checks the promises of the deciding rule (accepting node on the cycle;
/// clear node for gzg_clear; bounded cycle clocks reset for gzg_clear and
/// zero_check_free; a >= 1 edge plus a reset edge for one common clock for
/// lower_bound). Returns an error description, or nullopt when valid.
std::optional<std::string> validate_witness(const Tba& a, const Lasso& lasso, Rule rule);

}  // namespace tbuchi
