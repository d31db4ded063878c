#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tbuchi/clocks.hpp"

namespace tbuchi {

/// Relation in an atomic clock constraint `x # c`.
enum class Rel { lt, le, eq, ge, gt };

const char* rel_text(Rel r);

/// `clock # constant`, e.g. x<=3. Diagonal-free; constant is a natural number.
struct AtomicConstraint {
  ClockId clock = 0;
  Rel rel = Rel::le;
  int constant = 0;

  bool operator==(const AtomicConstraint&) const = default;
};

/// Conjunction of atoms; empty guard means `true`.
using Guard = std::vector<AtomicConstraint>;

struct Transition {
  unsigned src = 0;
  unsigned dst = 0;
  Guard guard;
  ClockSet reset;
  /// Synchronization label for network composition; unlabeled otherwise.
  std::optional<std::string> label;

  bool operator==(const Transition&) const = default;
};

/// Timed Büchi automaton over diagonal-free guards.
///
/// States and clocks are referred to by dense indices; clocks are 1-based so
/// that index 0 can serve as the DBM reference clock throughout.
class Tba {
 public:
  unsigned add_state(std::string name, bool accepting = false);
  ClockId add_clock(std::string name);
  void set_init(unsigned state);
  unsigned add_transition(Transition t);

  unsigned state_count() const { return static_cast<unsigned>(state_names_.size()); }
  unsigned clock_count() const { return static_cast<unsigned>(clock_names_.size()); }
  unsigned transition_count() const { return static_cast<unsigned>(transitions_.size()); }

  const std::string& state_name(unsigned s) const { return state_names_.at(s); }
  /// Clock names are indexed 1..clock_count().
  const std::string& clock_name(ClockId c) const { return clock_names_.at(c - 1); }

  std::optional<unsigned> state_index(const std::string& name) const;
  std::optional<ClockId> clock_index(const std::string& name) const;

  bool has_init() const { return init_.has_value(); }
  unsigned init() const;
  bool accepting(unsigned s) const { return accepting_.at(s); }

  const Transition& transition(unsigned t) const { return transitions_.at(t); }
  const std::vector<Transition>& transitions() const { return transitions_; }
  /// Indices of outgoing transitions of `s`, in declaration order.
  const std::vector<unsigned>& outgoing(unsigned s) const { return outgoing_.at(s); }

  /// Largest constant appearing in any guard (0 if there are none).
  int max_constant() const;

  /// All clocks {1..clock_count()}.
  ClockSet all_clocks() const { return ClockSet::first_n(clock_count()); }

  /// Structural equality: same names in the same order, same init/accepting
  /// flags and the same transition list.
  bool operator==(const Tba& o) const;

 private:
  std::vector<std::string> state_names_;
  std::vector<std::string> clock_names_;
  std::unordered_map<std::string, unsigned> state_by_name_;
  std::unordered_map<std::string, ClockId> clock_by_name_;
  std::vector<bool> accepting_;
  std::optional<unsigned> init_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<unsigned>> outgoing_;
};

/// Adds a fresh clock z and splits accepting states so that every run passing
/// through an accepting state infinitely often must let one time unit elapse
/// between consecutive visits: the automaton is strongly non-Zeno and has an
/// accepting run iff the original has a non-Zeno accepting run.
Tba snz_transform(const Tba& a);

/// One component of a synchronized network.
struct NetworkProcess {
  Tba automaton;
};

/// Synchronous product of processes. Transitions sharing a label are taken
/// jointly by every process declaring that label; unlabeled transitions
/// interleave. Clocks with equal names are shared. Accepting states are those
/// whose `accepting_component` coordinate is accepting locally.
Tba product(const std::vector<Tba>& processes, unsigned accepting_component);

/// One-line rendering of a transition, e.g. "t3: a -> b when x>=1 reset {x}".
std::string transition_text(const Tba& a, unsigned t_id);

}  // namespace tbuchi
