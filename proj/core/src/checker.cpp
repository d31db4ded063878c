#include "tbuchi/checker.hpp"

namespace tbuchi {

namespace {

SccHit plain_hit(const MaximalScc& scc, Rule rule, CouvreurEngine&) {
  return SccHit{rule, scc, std::nullopt};
}

std::optional<Rule> gzg_success(const SccSummary& s) {
  if (s.accepting_seen && s.clear_seen && s.bounded.subset_of(s.resets)) return Rule::gzg_clear;
  return std::nullopt;
}

/// Handler for completed guessing-zone-graph SCCs: an accepting SCC with a
/// clear node failed only because some bounded clock is never reset, so
/// re-examination with edge removals may still succeed.
OnMaximalFn make_gzg_on_maximal(unsigned resolve_depth, const Tba& a, SearchStats& stats) {
  return [resolve_depth, &a, &stats](const MaximalScc& scc,
                                     CouvreurEngine& eng) -> std::optional<SccHit> {
    if (!scc.summary.accepting_seen || !scc.summary.clear_seen) return std::nullopt;
    auto r = resolve_blocked_scc(freeze_scc(eng.graph(), scc), gzg_success, resolve_depth, stats);
    if (!r) return std::nullopt;
    return SccHit{r->first, scc,
                  build_lasso_from_explicit(eng.graph(), eng, r->first, GraphKind::gzg, a,
                                            r->second)};
  };
}

void fold_inner(SearchStats& outer, const SearchStats& inner) {
  outer.nodes_visited += inner.nodes_visited;
  outer.nodes_stored += inner.nodes_stored;
  outer.edges_traversed += inner.edges_traversed;
  outer.scc_count += inner.scc_count;
  outer.restarts += inner.restarts;
  outer.gzg_nodes_expanded += inner.nodes_visited;
}

}  // namespace

CheckResult check_snz(const Tba& a, std::size_t max_nodes) {
  CheckResult res;
  const Tba b = snz_transform(a);
  ZoneGraphExplorer g(b, max_nodes);
  auto success = [](const SccSummary& s) -> std::optional<Rule> {
    if (s.accepting_seen) return Rule::snz;
    return std::nullopt;
  };
  // A completed maximal SCC cannot be accepting (that would have fired at a
  // merge), so there is nothing to re-examine.
  CouvreurEngine eng(g, success, plain_hit, [](const MaximalScc&, CouvreurEngine&) {
    return std::nullopt;
  });
  auto hit = eng.run(res.stats);
  if (hit) {
    res.verdict.is_empty = false;
    res.verdict.rule = hit->rule;
    res.verdict.witness =
        build_lasso_from_scc(g, eng, hit->rule, GraphKind::zg_snz, b, hit->scc);
  }
  return res;
}

CheckResult check_gzg(const Tba& a, std::size_t max_nodes) {
  CheckResult res;
  GzgExplorer g(a, max_nodes);
  CouvreurEngine eng(g, gzg_success, plain_hit,
                     make_gzg_on_maximal(a.clock_count() + 1, a, res.stats));
  auto hit = eng.run(res.stats);
  res.stats.gzg_nodes_expanded = res.stats.nodes_visited;
  if (hit) {
    res.verdict.is_empty = false;
    res.verdict.rule = hit->rule;
    res.verdict.witness =
        hit->lasso ? *std::move(hit->lasso)
                   : build_lasso_from_scc(g, eng, hit->rule, GraphKind::gzg, a, hit->scc);
  }
  return res;
}

CheckResult check_optimized(const Tba& a, std::size_t max_nodes) {
  CheckResult res;
  ZoneGraphExplorer g(a, max_nodes);
  const unsigned resolve_depth = a.clock_count() + 1;

  auto quick_success = [](const SccSummary& s) -> std::optional<Rule> {
    if (!s.accepting_seen) return std::nullopt;
    // A clock held >= 1 on one edge and reset on another forces a time unit
    // per lap regardless of everything else.
    if (s.lower1.intersects(s.resets)) return Rule::lower_bound;
    if (!s.zero_check_seen && s.bounded.subset_of(s.resets)) return Rule::zero_check_free;
    return std::nullopt;
  };
  auto zcfree_success = [](const SccSummary& s) -> std::optional<Rule> {
    if (s.accepting_seen && !s.zero_check_seen && s.bounded.subset_of(s.resets))
      return Rule::zero_check_free;
    return std::nullopt;
  };

  auto on_maximal = [&](const MaximalScc& scc, CouvreurEngine& eng) -> std::optional<SccHit> {
    if (!scc.summary.accepting_seen) return std::nullopt;
    if (!scc.summary.zero_check_seen) {
      // Only boundedness can be in the way; drop blocked edges and retry.
      auto r = resolve_blocked_scc(freeze_scc(g, scc), zcfree_success, resolve_depth, res.stats);
      if (!r) return std::nullopt;
      return SccHit{r->first, scc,
                    build_lasso_from_explicit(g, eng, r->first, GraphKind::zg, a, r->second)};
    }
    // Zero-checks may prevent time from elapsing anywhere in this SCC; decide
    // with the guessing zone graph restricted to the SCC, rooted at its entry
    // with the full guess.
    std::vector<ZgNode> members;
    members.reserve(scc.members.size());
    for (NodeId m : scc.members) members.push_back(g.node(m));
    GzgNode root{g.node_state(scc.root), g.node_zone(scc.root), a.all_clocks()};
    RestrictedGzgExplorer inner_graph(a, root, std::move(members), max_nodes);
    SearchStats inner_stats;
    CouvreurEngine inner_eng(inner_graph, gzg_success, plain_hit,
                             make_gzg_on_maximal(resolve_depth, a, inner_stats));
    std::optional<SccHit> inner_hit;
    try {
      inner_hit = inner_eng.run(inner_stats);
    } catch (...) {
      fold_inner(res.stats, inner_stats);
      throw;
    }
    fold_inner(res.stats, inner_stats);
    if (!inner_hit) return std::nullopt;

    Lasso lasso = inner_hit->lasso
                      ? *std::move(inner_hit->lasso)
                      : build_lasso_from_scc(inner_graph, inner_eng, inner_hit->rule,
                                             GraphKind::gzg, a, inner_hit->scc);
    // The inner stem starts at the SCC entry; prepend the outer path to it,
    // lifted to full-guess nodes (always fireable there: no positivity
    // hypothesis is added and the guess stays full).
    const CouvreurEngine::Path outer = eng.path_from_initial(scc.root);
    std::vector<LassoNode> stem;
    for (NodeId n : outer.nodes) {
      LassoNode ln;
      ln.state = g.node_state(n);
      ln.zone = g.node_zone(n);
      ln.guess = a.all_clocks();
      ln.state_name = a.state_name(ln.state);
      stem.push_back(std::move(ln));
    }
    std::vector<int> stem_transitions = outer.transitions;
    // Seam: the lifted path ends exactly at the inner graph's initial node.
    stem_transitions.insert(stem_transitions.end(), lasso.stem_transitions.begin(),
                            lasso.stem_transitions.end());
    stem.insert(stem.end(), lasso.stem_nodes.begin() + 1, lasso.stem_nodes.end());
    lasso.stem_nodes = std::move(stem);
    lasso.stem_transitions = std::move(stem_transitions);
    return SccHit{inner_hit->rule, scc, std::move(lasso)};
  };

  CouvreurEngine eng(g, quick_success, plain_hit, on_maximal);
  auto hit = eng.run(res.stats);
  if (hit) {
    res.verdict.is_empty = false;
    res.verdict.rule = hit->rule;
    res.verdict.witness =
        hit->lasso ? *std::move(hit->lasso)
                   : build_lasso_from_scc(g, eng, hit->rule, GraphKind::zg, a, hit->scc);
  }
  return res;
}

}  // namespace tbuchi
