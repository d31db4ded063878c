#pragma once

#include "tbuchi/scc.hpp"
#include "tbuchi/witness.hpp"

namespace tbuchi {

struct Verdict {
  bool is_empty = true;
  std::optional<Rule> rule;      ///< set iff non-empty
  std::optional<Lasso> witness;  ///< set iff non-empty
};

struct CheckResult {
  Verdict verdict;
  SearchStats stats;
};

/// Baseline: searches the zone graph of the strongly-non-Zeno transform for
/// any accepting SCC.
CheckResult check_snz(const Tba& a, std::size_t max_nodes = 0);

/// Searches the guessing zone graph for an accepting SCC with a clear node
/// whose bounded clocks are all reset, re-examining blocked SCCs with edge
/// removals.
CheckResult check_gzg(const Tba& a, std::size_t max_nodes = 0);

/// Searches the plain zone graph first, proving non-emptiness on the spot
/// when a clock is both held >= 1 and reset inside an accepting SCC, or when
/// the SCC is zero-check-free with all bounded clocks reset; only accepting
/// SCCs with zero-checks fall back to a guessing-zone-graph analysis
/// restricted to the SCC.
CheckResult check_optimized(const Tba& a, std::size_t max_nodes = 0);

/// Builds a concrete lasso for a witnessing SCC: the stem follows the search
/// tree, the cycle greedily visits nodes/edges that certify the rule.
/// members/edges use graph node ids; edges must span a strongly connected
/// subgraph containing every promise the rule needs.
Lasso build_lasso(SymbolicGraph& g, const CouvreurEngine& eng, Rule rule, GraphKind kind,
                  const Tba& replay, const std::vector<NodeId>& members,
                  const std::vector<ExplicitEdge>& edges, const SccSummary& summary);

Lasso build_lasso_from_scc(SymbolicGraph& g, const CouvreurEngine& eng, Rule rule, GraphKind kind,
                           const Tba& replay, const MaximalScc& scc);

/// Variant for re-examined SCCs: nodes/edges come from the surviving
/// explicit subgraph whose orig fields reference g.
Lasso build_lasso_from_explicit(SymbolicGraph& g, const CouvreurEngine& eng, Rule rule,
                                GraphKind kind, const Tba& replay,
                                const ExplicitGraphData& surviving);

}  // namespace tbuchi
