#pragma once

#include "tbuchi/automaton.hpp"

namespace tbuchi {

/// Scalable family with a linear zone graph whose strongly-non-Zeno
/// transform blows up exponentially: blocks k = n..2 each reset clocks
/// x_1..x_k and y, then loop between b_k and the accepting a_k under y<=d,
/// resetting x_1..x_{k-1}. The automaton has no non-Zeno accepting run.
/// Requires n >= 2 and d >= 0.
Tba gen_an(unsigned n, int d);

enum class FischerVariant { mutex, liveness };

/// Fischer's mutual exclusion protocol for n >= 2 processes (write deadline
/// x<=1, read threshold x>1) composed with a monitor:
///  - mutex: accepts iff two critical-section entries happen without an
///    intervening release; the protocol is correct, so this is empty.
///  - liveness: monitor may silently stop observing and accept forever;
///    always non-empty.
Tba gen_fischer(unsigned n, FischerVariant variant);

/// Two states, one clock; alternates a -> b (x>=1) and b -> a (x<=1, reset x).
/// Non-empty: every loop spans at least one time unit.
Tba fixture_a1();

/// Three states, two clocks; every cycle zero-checks a clock that was reset
/// when the cycle started, so time can never elapse: empty.
Tba fixture_a2();

/// Like fixture_a2 but one branch zero-checks before the reset, leaving a
/// cycle where time can elapse: non-empty.
Tba fixture_a3();

}  // namespace tbuchi
