#include "tbuchi/region_oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <unordered_set>

namespace tbuchi {

namespace {

constexpr unsigned kMaxOracleClocks = 3;
constexpr int kMaxOracleConstant = 2;

// Internal headroom: the non-Zenoness transform adds one clock and may raise
// the maximal constant to 1.
constexpr unsigned kMaxSystemClocks = kMaxOracleClocks + 1;

}  // namespace

std::size_t Region::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const ClockRegion& p : parts) {
    mix(p.above ? 9176u : 57u);
    mix(static_cast<std::size_t>(p.k));
    mix(static_cast<std::size_t>(p.rank));
  }
  return h;
}

RegionSystem::RegionSystem(unsigned clock_count, int max_constant)
    : clock_count_(clock_count),
      max_constant_(max_constant),
      scale_(static_cast<int>(clock_count) + 1) {
  const int M = max_constant_;
  const unsigned n = clock_count_;

  // Per-clock base choices: above, each integer 0..M, each open unit
  // interval (k, k+1) for k = 0..M-1 (fractional rank assigned below).
  struct BaseChoice {
    bool above;
    int k;
    bool frac;
  };
  std::vector<BaseChoice> bases;
  bases.push_back({true, 0, false});
  for (int k = 0; k <= M; ++k) bases.push_back({false, k, false});
  for (int k = 0; k < M; ++k) bases.push_back({false, k, true});

  std::vector<std::size_t> digit(n, 0);
  for (;;) {
    std::vector<unsigned> frac_clocks;
    Region r;
    r.parts.resize(n);
    for (unsigned i = 0; i < n; ++i) {
      const BaseChoice& b = bases[digit[i]];
      if (b.above) {
        r.parts[i] = ClockRegion{true, 0, 0};
      } else {
        r.parts[i] = ClockRegion{false, b.k, 0};
        if (b.frac) frac_clocks.push_back(i);
      }
    }

    // Enumerate the dense rank assignments over the fractional clocks:
    // surjections onto {1..t} for some t, encoding the order (with ties) of
    // the fractional parts.
    const std::size_t f = frac_clocks.size();
    if (f == 0) {
      regions_.push_back(r);
    } else {
      std::vector<int> rank(f, 1);
      for (;;) {
        int top = 0;
        for (int v : rank) top = std::max(top, v);
        bool dense = true;
        for (int v = 1; v <= top && dense; ++v)
          dense = std::find(rank.begin(), rank.end(), v) != rank.end();
        if (dense) {
          Region out = r;
          for (std::size_t j = 0; j < f; ++j) out.parts[frac_clocks[j]].rank = rank[j];
          regions_.push_back(std::move(out));
        }
        std::size_t pos = f;
        while (pos > 0 && ++rank[pos - 1] > static_cast<int>(f)) rank[--pos] = 1;
        if (pos == 0) break;
      }
    }

    std::size_t carry = n;
    while (carry > 0 && ++digit[carry - 1] == bases.size()) digit[--carry] = 0;
    if (carry == 0) break;
  }

  for (std::size_t i = 0; i < regions_.size(); ++i)
    by_hash_[regions_[i].hash()].push_back(i);

  delay_successors_.resize(regions_.size());
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    std::vector<std::size_t>& chain = delay_successors_[i];
    std::size_t at = i;
    for (;;) {
      chain.push_back(at);
      const std::size_t next = index_of(immediate_successor(regions_[at]));
      if (next == at) break;
      at = next;
    }
  }
}

const RegionSystem& RegionSystem::get(unsigned clock_count, int max_constant) {
  if (clock_count > kMaxSystemClocks || max_constant > kMaxOracleConstant)
    throw OracleCapError("region system too large: " + std::to_string(clock_count) +
                         " clocks with maximal constant " + std::to_string(max_constant));
  if (max_constant < 0) throw std::invalid_argument("negative maximal constant");
  // Not thread-safe: the checker and the tests are single-threaded.
  static std::map<std::pair<unsigned, int>, std::unique_ptr<RegionSystem>> cache;
  std::unique_ptr<RegionSystem>& slot = cache[{clock_count, max_constant}];
  if (!slot) slot.reset(new RegionSystem(clock_count, max_constant));
  return *slot;
}

std::size_t RegionSystem::index_of(const Region& r) const {
  auto it = by_hash_.find(r.hash());
  if (it != by_hash_.end())
    for (std::size_t i : it->second)
      if (regions_[i] == r) return i;
  throw std::invalid_argument("region does not belong to this region system");
}

Region RegionSystem::region_of(const std::vector<int>& scaled, int den) const {
  if (scaled.size() != clock_count_)
    throw std::invalid_argument("valuation has wrong clock count");
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  Region r;
  r.parts.resize(clock_count_);
  std::vector<int> rems;
  for (unsigned i = 0; i < clock_count_; ++i) {
    const int v = scaled[i];
    if (v < 0) throw std::invalid_argument("negative clock value");
    if (v > max_constant_ * den) {
      r.parts[i] = ClockRegion{true, 0, 0};
      continue;
    }
    const int k = v / den;
    const int rem = v % den;
    r.parts[i] = ClockRegion{false, k, rem};  // rank patched below
    if (rem > 0) rems.push_back(rem);
  }
  std::sort(rems.begin(), rems.end());
  rems.erase(std::unique(rems.begin(), rems.end()), rems.end());
  for (unsigned i = 0; i < clock_count_; ++i) {
    ClockRegion& p = r.parts[i];
    if (!p.above && p.rank > 0)
      p.rank = 1 + static_cast<int>(std::lower_bound(rems.begin(), rems.end(), p.rank) -
                                    rems.begin());
  }
  return r;
}

std::vector<int> RegionSystem::representative(const Region& r) const {
  if (r.parts.size() != clock_count_)
    throw std::invalid_argument("region has wrong clock count");
  std::vector<int> v(clock_count_);
  for (unsigned i = 0; i < clock_count_; ++i) {
    const ClockRegion& p = r.parts[i];
    v[i] = p.above ? (max_constant_ + 1) * scale_ : p.k * scale_ + p.rank;
  }
  return v;
}

Zone RegionSystem::cell(const Region& r) const {
  if (r.parts.size() != clock_count_)
    throw std::invalid_argument("region has wrong clock count");
  Dbm d(clock_count_ + 1);
  for (unsigned i = 0; i < clock_count_; ++i) {
    const ClockRegion& p = r.parts[i];
    if (p.above) {
      d.tighten(0, i + 1, Bound::strict(-max_constant_));
    } else if (p.rank == 0) {
      d.tighten(i + 1, 0, Bound::weak(p.k));
      d.tighten(0, i + 1, Bound::weak(-p.k));
    } else {
      d.tighten(i + 1, 0, Bound::strict(p.k + 1));
      d.tighten(0, i + 1, Bound::strict(-p.k));
    }
  }
  for (unsigned i = 0; i < clock_count_; ++i) {
    for (unsigned j = i + 1; j < clock_count_; ++j) {
      const ClockRegion& pi = r.parts[i];
      const ClockRegion& pj = r.parts[j];
      if (pi.above || pj.above) continue;
      const int diff = pi.k - pj.k;
      if (pi.rank == pj.rank) {
        d.tighten(i + 1, j + 1, Bound::weak(diff));
        d.tighten(j + 1, i + 1, Bound::weak(-diff));
      } else if (pi.rank < pj.rank) {
        d.tighten(i + 1, j + 1, Bound::strict(diff));
        d.tighten(j + 1, i + 1, Bound::strict(1 - diff));
      } else {
        d.tighten(j + 1, i + 1, Bound::strict(-diff));
        d.tighten(i + 1, j + 1, Bound::strict(1 + diff));
      }
    }
  }
  auto z = Zone::canonical(std::move(d));
  if (!z) throw std::logic_error("region cell is empty");
  return *std::move(z);
}

std::vector<Zone> RegionSystem::distinguished_cells(const Region& r) const {
  const Zone base = cell(r);
  const int M = max_constant_;

  // Candidate diagonal constraints for one pair, as optional tightenings of
  // (i,j) and (j,i): the points -M..M and the open intervals between and
  // beyond them.
  struct DiagCell {
    std::optional<Bound> upper;  // on (i, j)
    std::optional<Bound> lower;  // on (j, i)
  };
  std::vector<DiagCell> shapes;
  shapes.push_back({Bound::strict(-M), std::nullopt});
  for (int c = -M; c <= M; ++c) {
    shapes.push_back({Bound::weak(c), Bound::weak(-c)});
    if (c < M) shapes.push_back({Bound::strict(c + 1), Bound::strict(-c)});
  }
  shapes.push_back({std::nullopt, Bound::strict(-M)});

  struct PairChoices {
    unsigned i, j;  // DBM indices
    std::vector<DiagCell> viable;
  };
  std::vector<PairChoices> pairs;
  for (unsigned i = 0; i < clock_count_; ++i) {
    for (unsigned j = i + 1; j < clock_count_; ++j) {
      if (!r.parts[i].above && !r.parts[j].above) continue;
      PairChoices pc{i + 1, j + 1, {}};
      for (const DiagCell& s : shapes) {
        Dbm d = base.dbm();
        if (s.upper) d.tighten(pc.i, pc.j, *s.upper);
        if (s.lower) d.tighten(pc.j, pc.i, *s.lower);
        if (d.close()) pc.viable.push_back(s);
      }
      pairs.push_back(std::move(pc));
    }
  }

  std::vector<Zone> out;
  if (pairs.empty()) {
    out.push_back(base);
    return out;
  }
  std::vector<std::size_t> pick(pairs.size(), 0);
  for (;;) {
    Dbm d = base.dbm();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const DiagCell& s = pairs[p].viable[pick[p]];
      if (s.upper) d.tighten(pairs[p].i, pairs[p].j, *s.upper);
      if (s.lower) d.tighten(pairs[p].j, pairs[p].i, *s.lower);
    }
    if (auto z = Zone::canonical(std::move(d))) out.push_back(*std::move(z));
    std::size_t carry = pairs.size();
    while (carry > 0 && ++pick[carry - 1] == pairs[carry - 1].viable.size()) pick[--carry] = 0;
    if (carry == 0) break;
  }
  return out;
}

Region RegionSystem::immediate_successor(const Region& r) const {
  if (r.parts.size() != clock_count_)
    throw std::invalid_argument("region has wrong clock count");
  Region out = r;

  bool has_integral = false;
  bool has_frac = false;
  for (const ClockRegion& p : r.parts) {
    if (p.above) continue;
    (p.rank == 0 ? has_integral : has_frac) = true;
  }

  if (has_integral) {
    // An infinitesimal delay: clocks sitting on an integer acquire the
    // smallest fractional part (or leave the bounded range from M).
    for (ClockRegion& p : out.parts) {
      if (p.above || p.rank != 0) continue;
      if (p.k == max_constant_) p = ClockRegion{true, 0, 0};
    }
    bool moved_to_frac = false;
    for (const ClockRegion& p : out.parts)
      if (!p.above && p.rank == 0) moved_to_frac = true;
    if (moved_to_frac) {
      for (ClockRegion& p : out.parts)
        if (!p.above && p.rank > 0) ++p.rank;
      for (ClockRegion& p : out.parts)
        if (!p.above && p.rank == 0) p.rank = 1;
    }
    return out;
  }

  if (!has_frac) return out;  // every clock is above: delays change nothing

  // Delay until the largest fractional parts reach the next integer.
  int top = 0;
  for (const ClockRegion& p : r.parts)
    if (!p.above) top = std::max(top, p.rank);
  for (ClockRegion& p : out.parts) {
    if (p.above) continue;
    if (p.rank == top) {
      ++p.k;
      p.rank = 0;
    }
  }
  return out;
}

const std::vector<std::size_t>& RegionSystem::delay_successors(std::size_t index) const {
  return delay_successors_.at(index);
}

std::vector<std::pair<unsigned, RgNode>> rg_successors(const Tba& a, const RegionSystem& rs,
                                                       const RgNode& node) {
  if (a.clock_count() != rs.clock_count())
    throw std::invalid_argument("automaton and region system disagree on clock count");
  std::vector<std::pair<unsigned, RgNode>> out;
  std::unordered_set<std::size_t> seen;  // (transition, target) packed
  for (std::size_t s : rs.delay_successors(node.region)) {
    const std::vector<int> rep = rs.representative(rs.regions()[s]);
    for (unsigned t_id : a.outgoing(node.state)) {
      const Transition& t = a.transitions()[t_id];
      bool sat = true;
      for (const AtomicConstraint& atom : t.guard) {
        const int lhs = rep[atom.clock - 1];
        const int rhs = atom.constant * rs.scale();
        switch (atom.rel) {
          case Rel::lt: sat = lhs < rhs; break;
          case Rel::le: sat = lhs <= rhs; break;
          case Rel::eq: sat = lhs == rhs; break;
          case Rel::ge: sat = lhs >= rhs; break;
          case Rel::gt: sat = lhs > rhs; break;
        }
        if (!sat) break;
      }
      if (!sat) continue;
      std::vector<int> post = rep;
      t.reset.for_each([&post](ClockId c) { post[c - 1] = 0; });
      const RgNode target{t.dst, rs.index_of(rs.region_of(post, rs.scale()))};
      const std::size_t key =
          (static_cast<std::size_t>(t_id) * rs.region_count() + target.region) *
              a.state_count() +
          target.state;
      if (seen.insert(key).second) out.emplace_back(t_id, target);
    }
  }
  return out;
}

std::vector<std::size_t> regions_intersecting(const RegionSystem& rs, const Zone& z) {
  if (z.dim() != rs.clock_count() + 1)
    throw std::invalid_argument("zone and region system disagree on dimension");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rs.region_count(); ++i)
    if (intersect(z, rs.cell(rs.regions()[i]))) out.push_back(i);
  return out;
}

bool rg_check(const Tba& a) {
  if (a.clock_count() > kMaxOracleClocks || a.max_constant() > kMaxOracleConstant)
    throw OracleCapError("region oracle supports at most " +
                         std::to_string(kMaxOracleClocks) + " clocks and constants up to " +
                         std::to_string(kMaxOracleConstant) + "; got " +
                         std::to_string(a.clock_count()) + " clocks, maximal constant " +
                         std::to_string(a.max_constant()));

  // On the transformed automaton every cycle through an accepting state
  // forces at least one time unit per lap (a fresh clock must climb from 0 to
  // 1 between consecutive visits), and region moves are realizable from every
  // point of a region.  So a reachable nontrivial cycle through an accepting
  // state is exactly a non-Zeno accepting run.
  const Tba b = snz_transform(a);
  const RegionSystem& rs = RegionSystem::get(b.clock_count(), b.max_constant());

  std::unordered_map<RgNode, std::size_t, RgNodeHash> ids;
  std::vector<RgNode> nodes;
  std::vector<std::vector<std::size_t>> succ;
  auto intern = [&](const RgNode& n) {
    auto [it, fresh] = ids.try_emplace(n, nodes.size());
    if (fresh) {
      nodes.push_back(n);
      succ.emplace_back();
    }
    return it->second;
  };

  const std::vector<int> zeros(b.clock_count(), 0);
  intern(RgNode{b.init(), rs.index_of(rs.region_of(zeros, 1))});
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    std::unordered_set<std::size_t> targets;
    for (const auto& [t_id, v] : rg_successors(b, rs, nodes[u])) targets.insert(intern(v));
    succ[u].assign(targets.begin(), targets.end());
  }

  // Tarjan over the explicit graph; a component is a witness when it is
  // nontrivial (a real cycle) and contains an accepting state.
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(nodes.size(), none), low(nodes.size(), 0);
  std::vector<bool> on_stack(nodes.size(), false);
  std::vector<std::size_t> stack;
  struct Frame {
    std::size_t v;
    std::size_t ei;
  };
  std::size_t next = 0;
  for (std::size_t root = 0; root < nodes.size(); ++root) {
    if (index[root] != none) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.ei < succ[f.v].size()) {
        const std::size_t w = succ[f.v][f.ei++];
        if (index[w] == none) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] != index[v]) continue;
      std::vector<std::size_t> comp;
      for (;;) {
        const std::size_t w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
        if (w == v) break;
      }
      bool accepting = false;
      for (std::size_t w : comp) accepting = accepting || b.accepting(nodes[w].state);
      if (!accepting) continue;
      bool nontrivial = comp.size() > 1;
      if (!nontrivial)
        nontrivial = std::find(succ[comp[0]].begin(), succ[comp[0]].end(), comp[0]) !=
                     succ[comp[0]].end();
      if (nontrivial) return true;
    }
  }
  return false;
}

}  // namespace tbuchi
