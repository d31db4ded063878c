#include "tbuchi/generators.hpp"

#include <stdexcept>
#include <string>

namespace tbuchi {

Tba gen_an(unsigned n, int d) {
  if (n < 2) throw std::invalid_argument("gen_an needs n >= 2");
  if (d < 0) throw std::invalid_argument("gen_an needs d >= 0");

  Tba a;
  const ClockId y = a.add_clock("y");
  std::vector<ClockId> x(n + 1, 0);
  for (unsigned k = 1; k <= n; ++k) x[k] = a.add_clock("x" + std::to_string(k));

  // Block k: c<k>_0 -> c<k>_1 -> c<k>_y -> b<k>, then the accepting loop
  // b<k> <-> a<k>; blocks are chained from k = n down to k = 2.
  std::vector<unsigned> c0(n + 1), c1(n + 1), cy(n + 1), bs(n + 1), as(n + 1);
  for (unsigned k = n; k >= 2; --k) {
    const std::string suf = std::to_string(k);
    c0[k] = a.add_state("c" + suf + "_0");
    c1[k] = a.add_state("c" + suf + "_1");
    cy[k] = a.add_state("c" + suf + "_y");
    bs[k] = a.add_state("b" + suf);
    as[k] = a.add_state("a" + suf, true);
  }
  a.set_init(c0[n]);

  for (unsigned k = n; k >= 2; --k) {
    ClockSet low;  // x_1 .. x_{k-1}
    for (unsigned i = 1; i < k; ++i) low.add(x[i]);
    ClockSet all_k = low;  // x_1 .. x_k
    all_k.add(x[k]);

    a.add_transition(Transition{c0[k], c1[k], {}, all_k, std::nullopt});
    a.add_transition(Transition{c1[k], cy[k], {}, ClockSet::single(y), std::nullopt});
    a.add_transition(Transition{cy[k], bs[k], {}, {}, std::nullopt});
    a.add_transition(Transition{bs[k], as[k], {AtomicConstraint{y, Rel::le, d}}, {}, std::nullopt});
    a.add_transition(Transition{as[k], bs[k], {}, low, std::nullopt});
    if (k > 2) a.add_transition(Transition{bs[k], c0[k - 1], {}, {}, std::nullopt});
  }
  return a;
}

namespace {

std::string num(unsigned i) { return std::to_string(i); }

// Shared-variable abstraction of "id": state v_i means id == i. Writes (w<i>)
// move it anywhere, releases (rel<i>) zero it, and the self-loops t0_<i> /
// teq<i> let process i test id == 0 / id == i.
Tba fischer_id(unsigned n) {
  Tba a;
  std::vector<unsigned> v(n + 1);
  for (unsigned i = 0; i <= n; ++i) v[i] = a.add_state("v" + num(i));
  a.set_init(v[0]);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 0; j <= n; ++j)
      a.add_transition(Transition{v[j], v[i], {}, {}, "w" + num(i)});
    for (unsigned j = 0; j <= n; ++j)
      a.add_transition(Transition{v[j], v[0], {}, {}, "rel" + num(i)});
    a.add_transition(Transition{v[0], v[0], {}, {}, "t0_" + num(i)});
    a.add_transition(Transition{v[i], v[i], {}, {}, "teq" + num(i)});
  }
  return a;
}

Tba fischer_process(unsigned i) {
  Tba a;
  const ClockId xi = a.add_clock("x" + num(i));
  const unsigned idle = a.add_state("idle");
  const unsigned req = a.add_state("req");
  const unsigned wait = a.add_state("wait");
  const unsigned cs = a.add_state("cs");
  a.set_init(idle);
  a.add_transition(Transition{idle, req, {}, ClockSet::single(xi), "t0_" + num(i)});
  a.add_transition(
      Transition{req, wait, {AtomicConstraint{xi, Rel::le, 1}}, ClockSet::single(xi), "w" + num(i)});
  a.add_transition(Transition{wait, cs, {AtomicConstraint{xi, Rel::gt, 1}}, {}, "teq" + num(i)});
  a.add_transition(Transition{wait, req, {}, ClockSet::single(xi), "t0_" + num(i)});
  a.add_transition(Transition{cs, idle, {}, {}, "rel" + num(i)});
  return a;
}

Tba fischer_mutex_monitor(unsigned n) {
  Tba a;
  const unsigned m0 = a.add_state("m0");
  const unsigned m1 = a.add_state("m1");
  const unsigned bad = a.add_state("bad", true);
  a.set_init(m0);
  for (unsigned i = 1; i <= n; ++i)
    a.add_transition(Transition{m0, m1, {}, {}, "teq" + num(i)});
  for (unsigned i = 1; i <= n; ++i)
    a.add_transition(Transition{m1, m0, {}, {}, "rel" + num(i)});
  for (unsigned i = 1; i <= n; ++i)
    a.add_transition(Transition{m1, bad, {}, {}, "teq" + num(i)});
  a.add_transition(Transition{bad, bad, {}, {}, std::nullopt});
  return a;
}

Tba fischer_liveness_monitor() {
  Tba a;
  const unsigned s0 = a.add_state("s0");
  const unsigned s1 = a.add_state("s1", true);
  a.set_init(s0);
  a.add_transition(Transition{s0, s0, {}, {}, "teq1"});
  a.add_transition(Transition{s0, s1, {}, {}, std::nullopt});
  a.add_transition(Transition{s1, s1, {}, {}, std::nullopt});
  return a;
}

}  // namespace

Tba gen_fischer(unsigned n, FischerVariant variant) {
  if (n < 2) throw std::invalid_argument("gen_fischer needs n >= 2");
  std::vector<Tba> components;
  components.push_back(fischer_id(n));
  for (unsigned i = 1; i <= n; ++i) components.push_back(fischer_process(i));
  components.push_back(variant == FischerVariant::mutex ? fischer_mutex_monitor(n)
                                                        : fischer_liveness_monitor());
  return product(components, static_cast<unsigned>(components.size() - 1));
}

Tba fixture_a1() {
  Tba a;
  const ClockId x = a.add_clock("x");
  const unsigned sa = a.add_state("a");
  const unsigned sb = a.add_state("b", true);
  a.set_init(sa);
  a.add_transition(Transition{sa, sb, {AtomicConstraint{x, Rel::ge, 1}}, {}, std::nullopt});
  a.add_transition(
      Transition{sb, sa, {AtomicConstraint{x, Rel::le, 1}}, ClockSet::single(x), std::nullopt});
  return a;
}

Tba fixture_a2() {
  Tba a;
  const ClockId x = a.add_clock("x");
  const ClockId y = a.add_clock("y");
  const unsigned s0 = a.add_state("0", true);
  const unsigned s1 = a.add_state("1");
  const unsigned s2 = a.add_state("2");
  a.set_init(s0);
  a.add_transition(Transition{s0, s1, {}, ClockSet::single(x), std::nullopt});
  a.add_transition(Transition{s0, s2, {}, ClockSet::single(y), std::nullopt});
  a.add_transition(Transition{s1, s0, {AtomicConstraint{y, Rel::eq, 0}}, {}, std::nullopt});
  a.add_transition(Transition{s2, s0, {AtomicConstraint{x, Rel::eq, 0}}, {}, std::nullopt});
  return a;
}

Tba fixture_a3() {
  Tba a;
  const ClockId x = a.add_clock("x");
  const ClockId y = a.add_clock("y");
  const unsigned s0 = a.add_state("0", true);
  const unsigned s1 = a.add_state("1");
  const unsigned s2 = a.add_state("2");
  a.set_init(s0);
  a.add_transition(Transition{s0, s1, {}, ClockSet::single(x), std::nullopt});
  a.add_transition(Transition{s0, s2, {AtomicConstraint{x, Rel::eq, 0}}, {}, std::nullopt});
  a.add_transition(Transition{s1, s0, {AtomicConstraint{y, Rel::eq, 0}}, {}, std::nullopt});
  a.add_transition(Transition{s2, s0, {}, ClockSet::single(y), std::nullopt});
  return a;
}

}  // namespace tbuchi
