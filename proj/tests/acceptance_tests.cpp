// Acceptance gate for the non-emptiness checker.  Each criterion prints a
// single [PASS]/[FAIL] line; the process exits nonzero if any criterion
// fails.  Tolerances and frozen expectations are pinned inline next to the
// checks that use them.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tbuchi/checker.hpp"
#include "tbuchi/generators.hpp"
#include "tbuchi/parser.hpp"
#include "tbuchi/region_oracle.hpp"
#include "tbuchi/witness.hpp"
#include "tbuchi/zone_graph.hpp"

#include "test_util.hpp"

using namespace tbuchi;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;  // diagnostics for the current criterion

void note(std::string text) { g_notes.push_back(std::move(text)); }

void report(int n, bool ok, const std::string& what) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  if (!ok) {
    ++g_failures;
    for (const std::string& d : g_notes) std::fprintf(stderr, "    %s\n", d.c_str());
  }
  g_notes.clear();
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::size_t explore_zg(const Tba& a, std::size_t cap = 0) {
  ZoneGraphExplorer g(a, cap);
  g.initial();
  for (NodeId u = 0; u < g.stored(); ++u) g.successors(u);
  return g.stored();
}

std::size_t explore_gzg(const Tba& a, std::size_t cap = 0) {
  GzgExplorer g(a, cap);
  g.initial();
  for (NodeId u = 0; u < g.stored(); ++u) g.successors(u);
  return g.stored();
}

// --- criterion 1: frozen verdicts on the bundled fixtures, every decider ---

bool criterion1() {
  constexpr double kMaxMsPerCheck = 1000.0;  // pinned: each check < 1 s
  struct Row {
    const char* name;
    Tba a;
    bool nonempty;
  };
  const Row rows[] = {{"a1", fixture_a1(), true},
                      {"a2", fixture_a2(), false},
                      {"a3", fixture_a3(), true}};
  bool ok = true;
  for (const Row& r : rows) {
    struct Algo {
      const char* name;
      bool verdict;
      double ms;
    };
    std::vector<Algo> algos;
    for (int which = 0; which < 4; ++which) {
      const auto t0 = Clock::now();
      bool nonempty = false;
      const char* name = "";
      switch (which) {
        case 0: name = "optimized"; nonempty = !check_optimized(r.a).verdict.is_empty; break;
        case 1: name = "gzg"; nonempty = !check_gzg(r.a).verdict.is_empty; break;
        case 2: name = "snz"; nonempty = !check_snz(r.a).verdict.is_empty; break;
        default: name = "oracle"; nonempty = rg_check(r.a); break;
      }
      algos.push_back({name, nonempty, ms_since(t0)});
    }
    for (const Algo& alg : algos) {
      if (alg.verdict != r.nonempty) {
        ok = false;
        note(std::string(r.name) + " " + alg.name + ": got " +
             (alg.verdict ? "NONEMPTY" : "EMPTY") + ", expected " +
             (r.nonempty ? "NONEMPTY" : "EMPTY"));
      }
      if (alg.ms >= kMaxMsPerCheck) {
        ok = false;
        note(std::string(r.name) + " " + alg.name + ": took " + std::to_string(alg.ms) + " ms");
      }
    }
  }
  return ok;
}

// --- criterion 2: affine zone graph vs exponential doubled-automaton graph ---

bool criterion2() {
  bool ok = true;
  const auto t0 = Clock::now();

  // Stored zone-graph nodes of the staircase family must grow affinely in n:
  // successive differences constant within +-1 node (pinned tolerance).
  std::vector<std::size_t> zg_sizes;
  for (unsigned n = 2; n <= 8; ++n) zg_sizes.push_back(explore_zg(gen_an(n, 1)));
  std::size_t diff_min = SIZE_MAX, diff_max = 0;
  for (std::size_t i = 1; i < zg_sizes.size(); ++i) {
    const std::size_t diff = zg_sizes[i] - zg_sizes[i - 1];
    diff_min = std::min(diff_min, diff);
    diff_max = std::max(diff_max, diff);
  }
  if (zg_sizes.size() < 2 || diff_max - diff_min > 1) {
    ok = false;
    std::string sizes;
    for (std::size_t s : zg_sizes) sizes += std::to_string(s) + " ";
    note("zone-graph sizes for n = 2..8 not affine: " + sizes);
  }

  // The doubled automaton must blow up: at least 2^(n-1) stored zone-graph
  // nodes at the innermost gate state "b2" (exact floor, no tolerance).
  for (unsigned n = 2; n <= 8; ++n) {
    const Tba b = snz_transform(gen_an(n, 1));
    ZoneGraphExplorer g(b, 0);
    g.initial();
    for (NodeId u = 0; u < g.stored(); ++u) g.successors(u);
    std::size_t at_b2 = 0;
    for (NodeId u = 0; u < g.stored(); ++u)
      if (b.state_name(g.node(u).state) == "b2") ++at_b2;
    const std::size_t floor_count = std::size_t{1} << (n - 1);
    if (at_b2 < floor_count) {
      ok = false;
      note("doubled automaton n=" + std::to_string(n) + ": " + std::to_string(at_b2) +
           " nodes at state b2 < 2^(n-1) = " + std::to_string(floor_count));
    }
  }

  if (ms_since(t0) >= 30000.0) {  // pinned: the whole sweep < 30 s
    ok = false;
    note("sweep exceeded 30 s");
  }
  return ok;
}

// The deterministic model set shared by the structural criteria: all bundled
// fixtures, the staircase family up to n = 6, and Fischer up to n = 3.
std::vector<std::pair<std::string, Tba>> structural_models() {
  std::vector<std::pair<std::string, Tba>> models;
  models.emplace_back("a1", fixture_a1());
  models.emplace_back("a2", fixture_a2());
  models.emplace_back("a3", fixture_a3());
  for (unsigned n = 2; n <= 6; ++n)
    models.emplace_back("an" + std::to_string(n), gen_an(n, 1));
  for (unsigned n = 2; n <= 3; ++n) {
    models.emplace_back("fischer" + std::to_string(n) + "_mutex",
                        gen_fischer(n, FischerVariant::mutex));
    models.emplace_back("fischer" + std::to_string(n) + "_liveness",
                        gen_fischer(n, FischerVariant::liveness));
  }
  return models;
}

// --- criterion 3: guessing zone graph at most (clocks + 1) times the zone graph ---

bool criterion3() {
  const std::vector<std::pair<std::string, Tba>> models = structural_models();
  bool ok = true;
  for (const auto& [name, a] : models) {
    const std::size_t zg = explore_zg(a);
    const std::size_t gzg = explore_gzg(a);
    const std::size_t bound = zg * (a.clock_count() + 1);
    if (gzg > bound) {
      ok = false;
      note(name + ": gzg " + std::to_string(gzg) + " > bound " + std::to_string(bound) +
           " (zg " + std::to_string(zg) + ")");
    }
  }
  return ok;
}

// --- criterion 4: agreement with the region-graph oracle on random inputs ---

bool criterion4() {
  constexpr int kInstances = 500;       // pinned sample size
  constexpr double kBudgetMs = 300000;  // pinned: whole sweep < 5 min
  std::mt19937 gen(test::test_seed());
  bool ok = true;
  const auto t0 = Clock::now();
  for (int i = 0; i < kInstances; ++i) {
    const Tba a = test::random_tba(gen);
    const bool oracle = rg_check(a);
    const bool opt = !check_optimized(a).verdict.is_empty;
    const bool gzg = !check_gzg(a).verdict.is_empty;
    const bool snz = !check_snz(a).verdict.is_empty;
    if (opt != oracle || gzg != oracle || snz != oracle) {
      ok = false;
      std::ostringstream os;
      os << "instance " << i << ": oracle=" << oracle << " optimized=" << opt << " gzg=" << gzg
         << " snz=" << snz << "\n"
         << render_tba(a);
      note(os.str());
      if (g_notes.size() > 5) break;  // enough evidence
    }
  }
  if (ms_since(t0) >= kBudgetMs) {
    ok = false;
    note("sweep exceeded 5 min");
  }
  return ok;
}

// --- criterion 5: the optimized checker decides these families without ---
// --- expanding any guessing-zone-graph node ---

bool criterion5() {
  std::vector<std::pair<std::string, Tba>> models;
  for (unsigned n = 2; n <= 8; ++n)
    models.emplace_back("an" + std::to_string(n), gen_an(n, 1));
  for (unsigned n = 2; n <= 3; ++n) {
    models.emplace_back("fischer" + std::to_string(n) + "_mutex",
                        gen_fischer(n, FischerVariant::mutex));
    models.emplace_back("fischer" + std::to_string(n) + "_liveness",
                        gen_fischer(n, FischerVariant::liveness));
  }
  bool ok = true;
  for (const auto& [name, a] : models) {
    const CheckResult r = check_optimized(a);
    if (r.stats.gzg_nodes_expanded != 0) {
      ok = false;
      note(name + ": expanded " + std::to_string(r.stats.gzg_nodes_expanded) +
           " guessing-zone-graph nodes");
    }
  }
  // The mutex variants are empty, so the checker must have paid exactly the
  // price of the full zone graph: its visited-node count equals the stored
  // node count of an independent exhaustive zone-graph sweep.
  for (unsigned n = 2; n <= 3; ++n) {
    const Tba a = gen_fischer(n, FischerVariant::mutex);
    const CheckResult r = check_optimized(a);
    const std::size_t full = explore_zg(a);
    if (!r.verdict.is_empty) {
      ok = false;
      note("fischer" + std::to_string(n) + "_mutex: expected an empty verdict");
    }
    if (r.stats.nodes_visited != full) {
      ok = false;
      note("fischer" + std::to_string(n) + "_mutex: visited " +
           std::to_string(r.stats.nodes_visited) + " != full zone graph " + std::to_string(full));
    }
  }
  return ok;
}

// --- criterion 6: structural invariants of the symbolic machinery ---

bool criterion6() {
  bool ok = true;
  const auto t0 = Clock::now();
  std::mt19937 gen(test::test_seed());
  std::uniform_int_distribution<unsigned> clocks_dist(1, 3);
  std::uniform_int_distribution<int> m_dist(1, 2);

  // (a) Canonicalization idempotence, firing monotonicity, and extrapolation
  // idempotence on 1000 random zones (pinned sample size).
  std::bernoulli_distribution reset_coin(1.0 / 3.0);
  for (int i = 0; i < 1000; ++i) {
    const unsigned clocks = clocks_dist(gen);
    const int m = m_dist(gen);
    const Zone z = test::random_zone(gen, clocks, m);
    const std::optional<Zone> re = Zone::canonical(z.dbm());
    if (!re || !(*re == z)) {
      ok = false;
      note("re-canonicalizing a canonical matrix changed it at instance " + std::to_string(i));
    }
    const Zone az = approx_m(z, m);
    if (!az.includes(z) || !(approx_m(az, m) == az)) {
      ok = false;
      note("extrapolation not extensive/idempotent at instance " + std::to_string(i));
    }
    // Firing is monotone: a sub-zone's successor lies inside the super-zone's.
    Transition t;
    const int n_atoms = std::uniform_int_distribution<int>(0, 2)(gen);
    std::uniform_int_distribution<int> clock_dist(1, static_cast<int>(clocks));
    for (int k = 0; k < n_atoms; ++k)
      t.guard.push_back(
          AtomicConstraint{static_cast<ClockId>(clock_dist(gen)),
                           static_cast<Rel>(std::uniform_int_distribution<int>(0, 4)(gen)),
                           std::uniform_int_distribution<int>(0, m)(gen)});
    for (unsigned c = 1; c <= clocks; ++c)
      if (reset_coin(gen)) t.reset = t.reset | ClockSet::single(c);
    const Zone z2 = test::random_zone(gen, clocks, m);
    if (const std::optional<Zone> sub = intersect(z, z2)) {
      const std::optional<Zone> fired_sub = fire(*sub, t, m);
      const std::optional<Zone> fired_super = fire(z, t, m);
      if (fired_sub && (!fired_super || !fired_super->includes(*fired_sub))) {
        ok = false;
        note("firing is not monotone at instance " + std::to_string(i));
      }
    }
  }

  // (b) Every reachable zone orders the clocks pairwise, in both symbolic
  // graphs of every deterministic test model; (c) every reachable guess set
  // is downward closed in the clock order of its zone: whenever the zone
  // implies x <= y and y is guessed, x is guessed too.
  for (const auto& [name, a] : structural_models()) {
    ZoneGraphExplorer zg(a);
    zg.initial();
    for (NodeId u = 0; u < zg.stored(); ++u) zg.successors(u);
    for (NodeId u = 0; u < zg.stored(); ++u)
      if (!orders_clocks(zg.node(u).zone)) {
        ok = false;
        note(name + ": zone-graph node " + std::to_string(u) + " does not order clocks");
      }
    GzgExplorer g(a);
    g.initial();
    for (NodeId u = 0; u < g.stored(); ++u) g.successors(u);
    for (NodeId u = 0; u < g.stored(); ++u) {
      const GzgNode& node = g.node(u);
      if (!orders_clocks(node.zone)) {
        ok = false;
        note(name + ": guessing-zone-graph node " + std::to_string(u) +
             " does not order clocks");
      }
      for (ClockId x = 1; x <= a.clock_count(); ++x)
        for (ClockId y = 1; y <= a.clock_count(); ++y)
          if (x != y && node.zone.at(x, y) <= Bound::le_zero() && node.guess.contains(y) &&
              !node.guess.contains(x)) {
            ok = false;
            note(name + ": node " + std::to_string(u) + " guesses " + a.clock_name(y) +
                 " but not " + a.clock_name(x) + " although the zone implies " +
                 a.clock_name(x) + " <= " + a.clock_name(y));
          }
    }
  }

  // (d) The extrapolated zone sits between the refined-cell closure and the
  // plain region closure, on 200 random zones with at most 3 clocks and
  // maximal constant at most 2 (pinned): every refined cell meeting the zone
  // lies inside the extrapolation, and the extrapolation meets no region cell
  // that misses the zone.
  for (int i = 0; i < 200; ++i) {
    const unsigned clocks = clocks_dist(gen);
    const int m = m_dist(gen);
    const Zone z = test::random_zone(gen, clocks, m);
    const Zone az = approx_m(z, m);
    const RegionSystem& rs = RegionSystem::get(clocks, m);
    for (const Region& r : rs.regions()) {
      const Zone cell = rs.cell(r);
      const bool meets_zone = intersect(cell, z).has_value();
      if (!meets_zone && intersect(cell, az).has_value()) {
        ok = false;
        note("extrapolation escapes the region closure at instance " + std::to_string(i));
      }
      if (meets_zone)
        for (const Zone& d : rs.distinguished_cells(r))
          if (intersect(d, z).has_value() && !az.includes(d)) {
            ok = false;
            note("refined cell meeting the zone escapes the extrapolation at instance " +
                 std::to_string(i));
          }
    }
  }

  if (ms_since(t0) >= 120000.0) {  // pinned: the whole suite < 2 min
    ok = false;
    note("suite exceeded 2 min");
  }
  return ok;
}

// --- criterion 7: every non-emptiness verdict carries a replayable witness ---

bool criterion7() {
  bool ok = true;
  std::vector<std::pair<std::string, Tba>> models;
  models.emplace_back("a1", fixture_a1());
  models.emplace_back("a2", fixture_a2());
  models.emplace_back("a3", fixture_a3());
  for (unsigned n = 2; n <= 4; ++n)
    models.emplace_back("an" + std::to_string(n), gen_an(n, 1));
  models.emplace_back("fischer2_liveness", gen_fischer(2, FischerVariant::liveness));
  models.emplace_back("fischer3_liveness", gen_fischer(3, FischerVariant::liveness));
  std::mt19937 gen(test::test_seed() + 1);
  for (int i = 0; i < 200; ++i)
    models.emplace_back("random" + std::to_string(i), test::random_tba(gen));

  for (const auto& [name, a] : models) {
    for (int which = 0; which < 3 && ok; ++which) {
      const char* algo = which == 0 ? "optimized" : which == 1 ? "gzg" : "snz";
      const CheckResult r = which == 0   ? check_optimized(a)
                            : which == 1 ? check_gzg(a)
                                         : check_snz(a);
      if (r.verdict.is_empty) {
        if (r.verdict.rule || r.verdict.witness) {
          ok = false;
          note(name + " " + algo + ": empty verdict carries a rule or witness");
        }
        continue;
      }
      if (!r.verdict.rule || !r.verdict.witness) {
        ok = false;
        note(name + " " + algo + ": non-empty verdict lacks a rule or witness");
        continue;
      }
      if (const auto err = validate_witness(a, *r.verdict.witness, *r.verdict.rule)) {
        ok = false;
        note(name + " " + algo + ": witness rejected: " + *err);
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  report(1, criterion1(), "bundled fixtures decided correctly by all four deciders within 1 s each");
  report(2, criterion2(), "staircase family: affine zone graph, exponential doubled-automaton blowup at b2");
  report(3, criterion3(), "guessing zone graph stays within (clocks + 1) times the zone graph");
  report(4, criterion4(), "all three checkers agree with the region-graph oracle on 500 random inputs");
  report(5, criterion5(), "optimized checker decides benchmark families at plain zone-graph cost");
  report(6, criterion6(), "zone algebra, clock ordering, guess closure, and region-closure inclusions hold");
  report(7, criterion7(), "every non-emptiness verdict carries a validated witness lasso");
  return g_failures == 0 ? 0 : 1;
}
