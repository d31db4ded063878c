#include "tbuchi/automaton.hpp"

namespace tbuchi {

// Splits every accepting state q into q_1 (accepting, entered only when the
// fresh clock z is at least 1, resetting z) and q_2 (entered freely). All
// outgoing behaviour lives on q_2; a silent bridge q_1 -> q_2 rejoins them.
// Every visit to an accepting copy therefore needs one time unit since the
// previous one, so all accepting runs of the result are non-Zeno, and they
// project onto exactly the non-Zeno accepting runs of the input.
Tba snz_transform(const Tba& a) {
  Tba b;

  for (ClockId c = 1; c <= a.clock_count(); ++c) b.add_clock(a.clock_name(c));
  std::string z_name = "z";
  while (a.clock_index(z_name)) z_name += "_";
  const ClockId z = b.add_clock(z_name);

  auto fresh = [&b](std::string name) {
    while (b.state_index(name)) name += "_";
    return name;
  };

  // copy1 = accepting copy, copy2 = plain copy (equal for non-accepting states).
  std::vector<unsigned> copy1(a.state_count()), copy2(a.state_count());
  for (unsigned q = 0; q < a.state_count(); ++q) {
    if (a.accepting(q)) {
      copy1[q] = b.add_state(fresh(a.state_name(q) + "_1"), true);
      copy2[q] = b.add_state(fresh(a.state_name(q) + "_2"), false);
    } else {
      copy1[q] = copy2[q] = b.add_state(fresh(a.state_name(q)), false);
    }
  }
  if (a.has_init()) b.set_init(copy2[a.init()]);

  for (const Transition& t : a.transitions()) {
    const unsigned src = copy2[t.src];
    if (a.accepting(t.dst)) {
      Guard late = t.guard;
      late.push_back(AtomicConstraint{z, Rel::ge, 1});
      ClockSet reset_z = t.reset;
      reset_z.add(z);
      b.add_transition(Transition{src, copy1[t.dst], std::move(late), reset_z, t.label});
      b.add_transition(Transition{src, copy2[t.dst], t.guard, t.reset, t.label});
    } else {
      b.add_transition(Transition{src, copy1[t.dst], t.guard, t.reset, t.label});
    }
  }
  for (unsigned q = 0; q < a.state_count(); ++q)
    if (a.accepting(q))
      b.add_transition(Transition{copy1[q], copy2[q], {}, {}, std::nullopt});

  return b;
}

}  // namespace tbuchi
