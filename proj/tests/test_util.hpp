#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "tbuchi/automaton.hpp"
#include "tbuchi/dbm.hpp"

namespace tbuchi::test {

/// Seed for every randomized suite; override with TBA_CHECK_SEED.
inline unsigned test_seed() {
  if (const char* s = std::getenv("TBA_CHECK_SEED")) return static_cast<unsigned>(std::atoi(s));
  return 42;
}

/// A canonical nonempty zone reached from the origin by a random walk over
/// the symbolic operators, mirroring how zones arise during exploration.
inline Zone random_zone(std::mt19937& gen, unsigned clocks, int max_constant) {
  Zone z = Zone::origin(clocks + 1);
  std::uniform_int_distribution<int> op(0, 3);
  std::uniform_int_distribution<int> clock(1, static_cast<int>(clocks));
  std::uniform_int_distribution<int> rel(0, 4);
  std::uniform_int_distribution<int> constant(0, max_constant);
  const int steps = std::uniform_int_distribution<int>(1, 8)(gen);
  for (int i = 0; i < steps; ++i) {
    switch (op(gen)) {
      case 0:
        z = up(z);
        break;
      case 1: {
        AtomicConstraint atom{static_cast<ClockId>(clock(gen)), static_cast<Rel>(rel(gen)),
                              constant(gen)};
        if (auto g = and_guard(z, {atom})) z = *g;
        break;
      }
      case 2:
        z = reset(z, ClockSet::single(static_cast<ClockId>(clock(gen))));
        break;
      default:
        z = approx_m(z, max_constant);
        break;
    }
  }
  return z;
}

/// A small random automaton within the shapes the region oracle accepts:
/// at most 4 states, 1-3 clocks, constants <= 2, at most 8 transitions.
inline Tba random_tba(std::mt19937& gen) {
  Tba a;
  const unsigned states = std::uniform_int_distribution<unsigned>(1, 4)(gen);
  const unsigned clocks = std::uniform_int_distribution<unsigned>(1, 3)(gen);
  std::bernoulli_distribution acc(0.5);
  for (unsigned s = 0; s < states; ++s) a.add_state("s" + std::to_string(s), acc(gen));
  for (unsigned c = 1; c <= clocks; ++c) a.add_clock("x" + std::to_string(c));
  a.set_init(0);

  std::uniform_int_distribution<unsigned> state(0, states - 1);
  std::uniform_int_distribution<int> clock(1, static_cast<int>(clocks));
  std::uniform_int_distribution<int> rel(0, 4);
  std::uniform_int_distribution<int> constant(0, 2);
  std::uniform_int_distribution<int> atoms(0, 2);
  std::bernoulli_distribution resets(1.0 / 3.0);
  const unsigned transitions = std::uniform_int_distribution<unsigned>(1, 8)(gen);
  for (unsigned t = 0; t < transitions; ++t) {
    Transition tr;
    tr.src = state(gen);
    tr.dst = state(gen);
    const int n_atoms = atoms(gen);
    for (int i = 0; i < n_atoms; ++i)
      tr.guard.push_back(AtomicConstraint{static_cast<ClockId>(clock(gen)),
                                          static_cast<Rel>(rel(gen)), constant(gen)});
    for (unsigned c = 1; c <= clocks; ++c)
      if (resets(gen)) tr.reset = tr.reset | ClockSet::single(c);
    a.add_transition(std::move(tr));
  }
  return a;
}

}  // namespace tbuchi::test
