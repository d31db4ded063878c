#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tbuchi/automaton.hpp"
#include "tbuchi/dbm.hpp"

namespace tbuchi {

/// The region construction enumerates every clock region explicitly, which is
/// only tractable for very small inputs.  Oversized inputs are rejected with
/// this error instead of silently grinding away.
class OracleCapError : public std::runtime_error {
 public:
  explicit OracleCapError(const std::string& what) : std::runtime_error(what) {}
};

/// One clock's part of a region: either strictly above the maximal constant,
/// or an integer part `k` plus a fractional rank.  Rank 0 means the value is
/// exactly `k`; positive ranks order the clocks with nonzero fractional part
/// (1 = smallest fraction).  Ranks are shared across clocks: equal ranks mean
/// equal fractions.
struct ClockRegion {
  bool above = false;
  int k = 0;
  int rank = 0;

  bool operator==(const ClockRegion&) const = default;
};

struct Region {
  std::vector<ClockRegion> parts;

  bool operator==(const Region&) const = default;
  std::size_t hash() const;
};

/// All regions for a fixed clock count and maximal constant, with their
/// geometry (cells as zones, canonical representatives) and the time-elapse
/// successor structure.  Instances are interned: get() returns a shared
/// immutable system per (clock_count, max_constant) pair.
class RegionSystem {
 public:
  /// Caps are deliberately tiny (clock_count <= 4, max_constant <= 2);
  /// anything larger throws OracleCapError.
  static const RegionSystem& get(unsigned clock_count, int max_constant);

  unsigned clock_count() const { return clock_count_; }
  int max_constant() const { return max_constant_; }
  /// Denominator used by representative(): clock_count + 1.
  int scale() const { return scale_; }

  std::size_t region_count() const { return regions_.size(); }
  const std::vector<Region>& regions() const { return regions_; }
  std::size_t index_of(const Region& r) const;

  /// Region of the valuation (scaled[i] / den for clock i+1).  Exact.
  Region region_of(const std::vector<int>& scaled, int den) const;

  /// A canonical interior point of the region, scaled by scale().
  std::vector<int> representative(const Region& r) const;

  /// The region as a zone (dimension clock_count + 1).
  Zone cell(const Region& r) const;

  /// Refinement of cell(r) that additionally fixes, for every clock pair with
  /// at least one clock above the maximal constant, the position of the
  /// difference x_i - x_j relative to the integers -M..M.  The cells returned
  /// are exactly the nonempty refinements; their union is cell(r).
  std::vector<Zone> distinguished_cells(const Region& r) const;

  /// The unique next region reached by letting time elapse; returns r itself
  /// when every clock is already above the maximal constant.
  Region immediate_successor(const Region& r) const;

  /// Indices of all regions reachable by letting time elapse (including the
  /// region itself), in elapse order.
  const std::vector<std::size_t>& delay_successors(std::size_t index) const;

  RegionSystem(const RegionSystem&) = delete;
  RegionSystem& operator=(const RegionSystem&) = delete;

 private:
  RegionSystem(unsigned clock_count, int max_constant);

  unsigned clock_count_;
  int max_constant_;
  int scale_;
  std::vector<Region> regions_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
  std::vector<std::vector<std::size_t>> delay_successors_;
};

/// A node of the region graph: a control state paired with a region index.
struct RgNode {
  unsigned state = 0;
  std::size_t region = 0;

  bool operator==(const RgNode&) const = default;
};

struct RgNodeHash {
  std::size_t operator()(const RgNode& n) const {
    return n.region * 1000003u + n.state;
  }
};

/// Successors of a region-graph node: for every delay successor region and
/// every transition whose guard that region satisfies, the node reached by
/// firing the transition (resets applied).  Duplicate (transition, target)
/// pairs are emitted once, in elapse order.
std::vector<std::pair<unsigned, RgNode>> rg_successors(const Tba& a,
                                                       const RegionSystem& rs,
                                                       const RgNode& node);

/// Indices of the regions whose cell intersects the zone.
std::vector<std::size_t> regions_intersecting(const RegionSystem& rs, const Zone& z);

/// Decides whether the automaton has a non-Zeno accepting run, by exhaustive
/// region-graph search.  Only meant as a slow cross-check for tiny inputs:
/// requires clock_count <= 3 and max_constant <= 2, else throws
/// OracleCapError.
///
/// Works on the strongly-non-Zeno transform of the input, where acceptance
/// already implies one time unit per accepting lap, so the question reduces
/// to locating a reachable nontrivial cycle through an accepting state.
bool rg_check(const Tba& a);

}  // namespace tbuchi
