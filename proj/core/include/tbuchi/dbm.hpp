#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tbuchi/automaton.hpp"
#include "tbuchi/clocks.hpp"

namespace tbuchi {

/// A difference bound `(value, strictness)` with +infinity, encoded in one
/// int32 as `value*2 + (weak ? 1 : 0)` so that the natural bound order is the
/// integer order on the encoding: (c,<) < (c,<=) < (c+1,<).
class Bound {
 public:
  /// Default is the unconstrained bound.
  constexpr Bound() = default;

  static constexpr Bound infinity() { return Bound(kInfinityRaw); }
  static constexpr Bound strict(int value) { return Bound(value * 2); }
  static constexpr Bound weak(int value) { return Bound(value * 2 + 1); }
  static constexpr Bound le_zero() { return weak(0); }

  constexpr bool is_infinity() const { return raw_ == kInfinityRaw; }
  constexpr bool is_strict() const { return (raw_ & 1) == 0; }
  /// Finite bounds only.
  constexpr int value() const { return raw_ >> 1; }

  /// Bound addition; infinity absorbs. Throws std::overflow_error when the
  /// finite sum does not fit.
  Bound operator+(Bound o) const;

  constexpr bool operator==(const Bound&) const = default;
  constexpr bool operator<(Bound o) const { return raw_ < o.raw_; }
  constexpr bool operator<=(Bound o) const { return raw_ <= o.raw_; }
  constexpr bool operator>(Bound o) const { return raw_ > o.raw_; }
  constexpr bool operator>=(Bound o) const { return raw_ >= o.raw_; }

  constexpr std::int32_t raw() const { return raw_; }

  std::string text() const;

 private:
  static constexpr std::int32_t kInfinityRaw = INT32_MAX;
  constexpr explicit Bound(std::int32_t raw) : raw_(raw) {}

  std::int32_t raw_ = kInfinityRaw;
};

/// Difference bound matrix of dimension clock_count+1; row/column 0 is the
/// reference clock. Entry (i,j) bounds x_i - x_j.
class Dbm {
 public:
  /// All clock valuations >= 0 (the universe zone), already canonical.
  explicit Dbm(unsigned dim);

  /// The single valuation assigning 0 to every clock.
  static Dbm origin(unsigned dim);

  unsigned dim() const { return dim_; }
  Bound at(unsigned i, unsigned j) const { return m_[i * dim_ + j]; }
  void set(unsigned i, unsigned j, Bound b) { m_[i * dim_ + j] = b; }
  /// Lowers entry (i,j) to b if b is smaller.
  void tighten(unsigned i, unsigned j, Bound b);
  /// Conjoins one guard atom.
  void constrain(const AtomicConstraint& atom);

  /// Floyd-Warshall shortest closure. Returns false iff the zone is empty
  /// (a negative cycle exists); entries are unspecified in that case.
  bool close();

  bool operator==(const Dbm&) const = default;

 private:
  unsigned dim_;
  std::vector<Bound> m_;
};

/// A nonempty zone in canonical (all-pairs-tightest) form. Equality and
/// hashing are on the canonical matrix, so they coincide with set equality.
class Zone {
 public:
  /// Canonicalizes d; nullopt iff d is empty.
  static std::optional<Zone> canonical(Dbm d);

  static Zone origin(unsigned dim) { return Zone(Dbm::origin(dim)); }

  unsigned dim() const { return dbm_.dim(); }
  Bound at(unsigned i, unsigned j) const { return dbm_.at(i, j); }
  const Dbm& dbm() const { return dbm_; }

  bool operator==(const Zone& o) const { return dbm_ == o.dbm_; }
  std::size_t hash() const;

  /// Set inclusion: every entry of o is at most the corresponding entry here.
  bool includes(const Zone& o) const;

  /// Membership of the valuation v_i = scaled[i]/den (scaled[0] must be 0).
  bool contains_valuation(const std::vector<long long>& scaled, long long den) const;

 private:
  explicit Zone(Dbm d) : dbm_(std::move(d)) {}
  Dbm dbm_;
};

struct ZoneHash {
  std::size_t operator()(const Zone& z) const { return z.hash(); }
};

/// Unbounded time elapse: drops all upper bounds.
Zone up(const Zone& z);

/// Conjunction with a guard; nullopt iff the intersection is empty.
std::optional<Zone> and_guard(const Zone& z, const Guard& g);

/// Conjunction with x > 0 for every x in xs; nullopt iff empty.
std::optional<Zone> and_positive(const Zone& z, ClockSet xs);

/// Zone intersection; nullopt iff disjoint.
std::optional<Zone> intersect(const Zone& a, const Zone& b);

/// Sets every clock in r to 0.
Zone reset(const Zone& z, ClockSet r);

/// Classical maximal-constant extrapolation: upper bounds above M are dropped
/// and lower bounds above M are relaxed to "> M". Only ever grows the zone;
/// for fixed M the image is a finite set of zones.
Zone approx_m(const Zone& z, int M);

/// One symbolic transition step: time elapse, guard, reset, extrapolation.
/// nullopt iff the guard is unreachable from z by delaying.
std::optional<Zone> fire(const Zone& z, const Transition& t, int M);

/// Facts about how an edge constrains the clocks at the moment it is taken,
/// read off the crossing zone up(z) /\ guard.
struct EdgeProfile {
  ClockSet zero_checked;  ///< clocks that must equal 0 when crossing
  ClockSet bounded;       ///< clocks with a finite upper bound when crossing
  ClockSet lower1;        ///< clocks that are >= 1 whenever crossing
  ClockSet reset;         ///< clocks reset by the edge
  bool is_tau = false;    ///< internal guess-dropping edge, no clock facts

  bool operator==(const EdgeProfile&) const = default;
};

/// Profile of an edge whose crossing zone (up(z) /\ guard, canonical) is given.
EdgeProfile profile_of(const Zone& crossing, ClockSet reset);

/// Convenience form recomputing the crossing zone; nullopt iff infeasible.
std::optional<EdgeProfile> edge_profile(const Zone& z, const Transition& t);

/// True iff any two clocks are comparably ordered inside z
/// (for all i,j: z implies x_i <= x_j or x_j <= x_i).
bool orders_clocks(const Zone& z);

/// Human-readable constraint list, e.g. "x=0 & y-x<=2".
std::string zone_text(const Zone& z, const Tba& a);

}  // namespace tbuchi
